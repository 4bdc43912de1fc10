/*
 * Copyright 2026 The seg-eval Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "segeval/ingest.h"
#include "segeval/mapping.h"
#include "segeval/metrics.h"

namespace segeval {

struct EvalConfig {
  BinConfig bin;
  ToleranceConfig tolerance;
  Cutoffs cutoffs;
};

struct Evaluation {
  std::vector<QueryScores> per_query;  // evaluation order
  QueryScores all;
  int64_t num_q = 0;
  std::vector<std::string> warnings;
};

// Applies the three relevance models to one query and scores each.
QueryScores ScoreQuery(const RankedList& run, const QueryJudgments& judgments,
                       const EvalConfig& cfg);

// Full pipeline: align, score every query under every model, aggregate.
// Queries are scored on up to `jobs` threads (0 means one per hardware
// thread); the result does not depend on the thread count.
Evaluation Evaluate(const JudgmentPool& pool,
                    const std::vector<RankedList>& runs, const EvalConfig& cfg,
                    unsigned jobs = 1);

}  // namespace segeval
