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

#include "segeval/metrics.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace segeval {

double PrecisionAt(const JudgedRanking& ranking, int n) {
  if (n < 1) throw std::invalid_argument("cutoff must be positive");
  const std::size_t depth = std::min<std::size_t>(n, ranking.items.size());
  int64_t hits = 0;
  for (std::size_t i = 0; i < depth; ++i) {
    if (ranking.items[i].relevant) ++hits;
  }
  return static_cast<double>(hits) / n;
}

double AveragePrecision(const JudgedRanking& ranking) {
  double sum = 0.0;
  int64_t hits = 0;
  for (std::size_t i = 0; i < ranking.items.size(); ++i) {
    if (!ranking.items[i].relevant) continue;
    ++hits;
    sum += static_cast<double>(hits) / static_cast<double>(i + 1);
  }
  const int64_t base = std::max(ranking.rel_total, hits);
  return base == 0 ? 0.0 : sum / static_cast<double>(base);
}

double JudgedAt(const JudgedRanking& ranking, int n) {
  if (n < 1) throw std::invalid_argument("cutoff must be positive");
  const std::size_t depth = std::min<std::size_t>(n, ranking.items.size());
  int64_t judged = 0;
  for (std::size_t i = 0; i < depth; ++i) {
    if (ranking.items[i].judged) ++judged;
  }
  return static_cast<double>(judged) / n;
}

void Validate(const Cutoffs& cutoffs) {
  for (const auto* list : {&cutoffs.precision, &cutoffs.judged}) {
    if (list->empty()) throw std::invalid_argument("empty cutoff list");
    for (std::size_t i = 0; i < list->size(); ++i) {
      if ((*list)[i] < 1) throw std::invalid_argument("cutoffs must be >= 1");
      if (i > 0 && (*list)[i] <= (*list)[i - 1]) {
        throw std::invalid_argument("cutoffs must be strictly increasing");
      }
    }
  }
}

const char* Suffix(Family family) {
  switch (family) {
    case Family::kOverlap:
      return "";
    case Family::kBinned:
      return "_bin";
    case Family::kTolerance:
      return "_tol";
  }
  return "";
}

FamilyScores ScoreFamily(const JudgedRanking& ranking, const Cutoffs& cutoffs) {
  FamilyScores scores;
  scores.num_rel = ranking.rel_total;
  scores.num_ret = ranking.ret_total;
  scores.num_rel_ret = ranking.RelevantCount();
  scores.map = AveragePrecision(ranking);
  for (int n : cutoffs.precision) {
    scores.precision.push_back(PrecisionAt(ranking, n));
  }
  for (int n : cutoffs.judged) scores.judged.push_back(JudgedAt(ranking, n));
  return scores;
}

CollectionStats CountStats(const JudgmentPool& pool,
                           const std::vector<RankedList>& runs,
                           std::span<const std::string> queries) {
  const std::set<std::string> wanted(queries.begin(), queries.end());
  std::set<std::string> ret_videos;
  std::set<std::string> rel_videos;
  double ret_length = 0.0;
  double rel_length = 0.0;
  int64_t ret_count = 0;
  int64_t rel_count = 0;

  for (const RankedList& list : runs) {
    if (!wanted.contains(list.query)) continue;
    for (const RunEntry& entry : list.entries) {
      ret_videos.insert(entry.segment.video);
      ret_length += Duration(entry.segment);
      ++ret_count;
    }
  }
  for (const std::string& query : queries) {
    const QueryJudgments* judgments = pool.Find(query);
    if (judgments == nullptr) continue;
    for (const Segment& segment : judgments->relevant) {
      rel_videos.insert(segment.video);
      rel_length += Duration(segment);
      ++rel_count;
    }
  }

  CollectionStats stats;
  stats.videos_ret = static_cast<int64_t>(ret_videos.size());
  stats.videos_rel = static_cast<int64_t>(rel_videos.size());
  stats.avglength_ret = ret_count == 0 ? 0 : std::llround(ret_length / ret_count);
  stats.avglength_rel = rel_count == 0 ? 0 : std::llround(rel_length / rel_count);
  return stats;
}

QueryScores Aggregate(std::span<const QueryScores> per_query) {
  if (per_query.empty()) {
    throw std::invalid_argument("cannot aggregate zero queries");
  }
  QueryScores all;
  all.query = "all";
  const double count = static_cast<double>(per_query.size());
  for (Family f : kFamilies) {
    FamilyScores& total = all.families[static_cast<int>(f)];
    const FamilyScores& first = per_query.front().family(f);
    total.precision.assign(first.precision.size(), 0.0);
    total.judged.assign(first.judged.size(), 0.0);
    for (const QueryScores& q : per_query) {
      const FamilyScores& s = q.family(f);
      total.num_rel += s.num_rel;
      total.num_ret += s.num_ret;
      total.num_rel_ret += s.num_rel_ret;
      total.map += s.map;
      for (std::size_t i = 0; i < total.precision.size(); ++i) {
        total.precision[i] += s.precision.at(i);
      }
      for (std::size_t i = 0; i < total.judged.size(); ++i) {
        total.judged[i] += s.judged.at(i);
      }
    }
    total.map /= count;
    for (double& v : total.precision) v /= count;
    for (double& v : total.judged) v /= count;
  }
  return all;
}

}  // namespace segeval
