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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "segeval/core.h"
#include "segeval/ingest.h"

namespace segeval {

// One position of a relevance string.
struct JudgedItem {
  Segment segment;     // the unit that was judged: result, bin or window
  std::size_t source;  // index into RankedList::entries
  bool relevant = false;
  bool judged = false;
};

// The binary relevance string of one query under one relevance model.
//
// rel_total is the number of relevant units in the (possibly transformed)
// judgment set and is the recall base for average precision. ret_total is the
// number of items after any merging.
struct JudgedRanking {
  std::string query;
  std::vector<JudgedItem> items;
  int64_t rel_total = 0;
  int64_t ret_total = 0;

  int64_t RelevantCount() const;
};

// How the relevant (and judged) bins of a query are derived from its
// judgments.
enum class BinRule {
  kStart,   // the bin containing each judged segment's start time
  kExtent,  // every bin sharing positive duration with a judged segment
};

struct BinConfig {
  Seconds bin_size = 60.0;
  BinRule rule = BinRule::kStart;
};

struct ToleranceConfig {
  Seconds window = 10.0;
};

// Overlap relevance: a result is relevant iff it overlaps a relevant segment.
// Several results overlapping the same relevant segment are all credited.
JudgedRanking MapOverlap(const RankedList& run, const QueryJudgments& judgments);

// Index k of the bin [k * bin_size, (k + 1) * bin_size) containing t.
int64_t BinIndex(Seconds t, const BinConfig& cfg);
// Multiples of bin_size enclosing t. An exact multiple is its own floor, and
// BinCeil(t) - BinFloor(t) == bin_size always.
Seconds BinFloor(Seconds t, const BinConfig& cfg);
Seconds BinCeil(Seconds t, const BinConfig& cfg);

// Binned relevance. Each result is replaced by the bin its start time falls
// into; later results landing in an already used (video, bin) are dropped.
// A bin is relevant/judged according to cfg.rule.
JudgedRanking MapBinned(const RankedList& run, const QueryJudgments& judgments,
                        const BinConfig& cfg);

// Tolerance to irrelevance. A result stands for the window
// [start, start + window) of its video. It is relevant iff the window overlaps
// a relevant segment that no earlier result has been credited for; every
// relevant segment the window overlaps is then marked as credited.
JudgedRanking MapTolerance(const RankedList& run,
                           const QueryJudgments& judgments,
                           const ToleranceConfig& cfg);

}  // namespace segeval
