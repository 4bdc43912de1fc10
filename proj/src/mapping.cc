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

#include "segeval/mapping.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>

namespace segeval {
namespace {

using BinKey = std::pair<std::string, int64_t>;

void CheckConfig(const BinConfig& cfg) {
  if (!(cfg.bin_size > 0.0) || !std::isfinite(cfg.bin_size)) {
    throw std::invalid_argument("bin size must be positive");
  }
}

bool OverlapsAny(const Segment& segment, const std::vector<Segment>& set) {
  return std::any_of(set.begin(), set.end(), [&](const Segment& other) {
    return Overlaps(segment, other);
  });
}

bool OverlapsAnyJudged(const Segment& segment,
                       const std::vector<Judgment>& judged) {
  return std::any_of(judged.begin(), judged.end(), [&](const Judgment& j) {
    return Overlaps(segment, j.segment);
  });
}

Segment BinSegment(const std::string& video, int64_t index,
                   const BinConfig& cfg) {
  return Segment{video, cfg.bin_size * static_cast<double>(index),
                 cfg.bin_size * static_cast<double>(index + 1)};
}

void InsertBins(const Segment& segment, const BinConfig& cfg,
                std::set<BinKey>& bins) {
  const int64_t first = BinIndex(segment.start, cfg);
  if (cfg.rule == BinRule::kStart) {
    bins.emplace(segment.video, first);
    return;
  }
  // Neighbours are probed with the exact overlap test so that rounding in
  // end / bin_size cannot add or lose a bin.
  const int64_t last =
      static_cast<int64_t>(std::ceil(segment.end / cfg.bin_size));
  for (int64_t k = std::max<int64_t>(0, first - 1); k <= last; ++k) {
    if (Overlaps(segment, BinSegment(segment.video, k, cfg))) {
      bins.emplace(segment.video, k);
    }
  }
}

}  // namespace

int64_t JudgedRanking::RelevantCount() const {
  return std::count_if(items.begin(), items.end(),
                       [](const JudgedItem& item) { return item.relevant; });
}

JudgedRanking MapOverlap(const RankedList& run,
                         const QueryJudgments& judgments) {
  JudgedRanking out{run.query, {}, 0, 0};
  out.items.reserve(run.entries.size());
  for (std::size_t i = 0; i < run.entries.size(); ++i) {
    const Segment& segment = run.entries[i].segment;
    const bool relevant = OverlapsAny(segment, judgments.relevant);
    const bool judged = relevant || OverlapsAnyJudged(segment, judgments.judged);
    out.items.push_back(JudgedItem{segment, i, relevant, judged});
  }
  out.rel_total = static_cast<int64_t>(judgments.relevant.size());
  out.ret_total = static_cast<int64_t>(out.items.size());
  return out;
}

int64_t BinIndex(Seconds t, const BinConfig& cfg) {
  CheckConfig(cfg);
  return static_cast<int64_t>(std::floor(t / cfg.bin_size));
}

Seconds BinFloor(Seconds t, const BinConfig& cfg) {
  return cfg.bin_size * static_cast<double>(BinIndex(t, cfg));
}

Seconds BinCeil(Seconds t, const BinConfig& cfg) {
  return cfg.bin_size * static_cast<double>(BinIndex(t, cfg) + 1);
}

JudgedRanking MapBinned(const RankedList& run, const QueryJudgments& judgments,
                        const BinConfig& cfg) {
  CheckConfig(cfg);
  std::set<BinKey> relevant_bins;
  for (const Segment& segment : judgments.relevant) {
    InsertBins(segment, cfg, relevant_bins);
  }
  std::set<BinKey> judged_bins;
  for (const Judgment& j : judgments.judged) {
    InsertBins(j.segment, cfg, judged_bins);
  }

  JudgedRanking out{run.query, {}, 0, 0};
  std::set<BinKey> used;
  for (std::size_t i = 0; i < run.entries.size(); ++i) {
    const Segment& segment = run.entries[i].segment;
    BinKey key{segment.video, BinIndex(segment.start, cfg)};
    if (!used.insert(key).second) continue;
    const bool relevant = relevant_bins.contains(key);
    const bool judged = relevant || judged_bins.contains(key);
    out.items.push_back(
        JudgedItem{BinSegment(key.first, key.second, cfg), i, relevant, judged});
  }
  out.rel_total = static_cast<int64_t>(relevant_bins.size());
  out.ret_total = static_cast<int64_t>(out.items.size());
  return out;
}

JudgedRanking MapTolerance(const RankedList& run,
                           const QueryJudgments& judgments,
                           const ToleranceConfig& cfg) {
  if (!(cfg.window > 0.0) || !std::isfinite(cfg.window)) {
    throw std::invalid_argument("tolerance window must be positive");
  }
  const std::vector<Segment>& relevant = judgments.relevant;
  std::vector<bool> credited(relevant.size(), false);

  JudgedRanking out{run.query, {}, 0, 0};
  out.items.reserve(run.entries.size());
  for (std::size_t i = 0; i < run.entries.size(); ++i) {
    const Segment& segment = run.entries[i].segment;
    const Segment window{segment.video, segment.start,
                         segment.start + cfg.window};
    std::vector<std::size_t> hits;
    bool fresh = false;
    for (std::size_t r = 0; r < relevant.size(); ++r) {
      if (!Overlaps(window, relevant[r])) continue;
      hits.push_back(r);
      fresh = fresh || !credited[r];
    }
    if (fresh) {
      for (std::size_t r : hits) credited[r] = true;
    }
    const bool judged = !hits.empty() || OverlapsAnyJudged(window, judgments.judged);
    out.items.push_back(JudgedItem{window, i, fresh, judged});
  }
  out.rel_total = static_cast<int64_t>(relevant.size());
  out.ret_total = static_cast<int64_t>(out.items.size());
  return out;
}

}  // namespace segeval
