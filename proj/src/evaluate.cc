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

#include "segeval/evaluate.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <unordered_map>

namespace segeval {

QueryScores ScoreQuery(const RankedList& run, const QueryJudgments& judgments,
                       const EvalConfig& cfg) {
  QueryScores scores;
  scores.query = run.query;
  scores.families[static_cast<int>(Family::kOverlap)] =
      ScoreFamily(MapOverlap(run, judgments), cfg.cutoffs);
  scores.families[static_cast<int>(Family::kBinned)] =
      ScoreFamily(MapBinned(run, judgments, cfg.bin), cfg.cutoffs);
  scores.families[static_cast<int>(Family::kTolerance)] =
      ScoreFamily(MapTolerance(run, judgments, cfg.tolerance), cfg.cutoffs);
  return scores;
}

Evaluation Evaluate(const JudgmentPool& pool,
                    const std::vector<RankedList>& runs, const EvalConfig& cfg,
                    unsigned jobs) {
  Validate(cfg.cutoffs);
  EvaluationSet set = Align(pool, runs);

  std::unordered_map<std::string, const RankedList*> by_query;
  for (const RankedList& list : runs) by_query.emplace(list.query, &list);

  Evaluation result;
  result.num_q = static_cast<int64_t>(set.queries.size());
  result.warnings = std::move(set.warnings);
  result.per_query.resize(set.queries.size());

  auto score = [&](std::size_t i) {
    const std::string& query = set.queries[i];
    const RankedList& run = *by_query.at(query);
    QueryScores scores = ScoreQuery(run, *pool.Find(query), cfg);
    scores.stats = CountStats(pool, runs, std::span(&query, 1));
    result.per_query[i] = std::move(scores);
  };

  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(jobs, set.queries.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < set.queries.size(); ++i) score(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::jthread> pool_threads;
    pool_threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool_threads.emplace_back([&] {
        for (std::size_t i = next++; i < set.queries.size(); i = next++) {
          try {
            score(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
    pool_threads.clear();
    if (failure) std::rethrow_exception(failure);
  }

  result.all = Aggregate(result.per_query);
  result.all.stats = CountStats(pool, runs, set.queries);
  return result;
}

}  // namespace segeval
