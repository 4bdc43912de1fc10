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

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "segeval/ingest.h"
#include "segeval/mapping.h"

namespace segeval {

// Fraction of the first n items that are relevant. Positions past the end of
// the list count as non-relevant.
double PrecisionAt(const JudgedRanking& ranking, int n);

// Sum of P@i over relevant ranks i, divided by the recall base.
//
// The recall base is rel_total, raised to the number of relevant items when
// the overlap model credits more results than there are relevant segments,
// so the value stays in [0, 1]. Zero when nothing is relevant.
double AveragePrecision(const JudgedRanking& ranking);

// Fraction of the first n positions holding a judged item.
double JudgedAt(const JudgedRanking& ranking, int n);

struct Cutoffs {
  std::vector<int> precision{5, 10, 20};
  std::vector<int> judged{10, 20, 30};
};

// Throws std::invalid_argument unless both lists are non-empty, positive and
// strictly increasing.
void Validate(const Cutoffs& cutoffs);

// The relevance models, in report order.
enum class Family { kOverlap = 0, kBinned = 1, kTolerance = 2 };
inline constexpr std::array<Family, 3> kFamilies = {
    Family::kOverlap, Family::kBinned, Family::kTolerance};

// "", "_bin" or "_tol".
const char* Suffix(Family family);

// Every measure of one relevance model for one query (or their aggregate).
struct FamilyScores {
  int64_t num_rel = 0;
  int64_t num_ret = 0;
  int64_t num_rel_ret = 0;
  double map = 0.0;
  std::vector<double> precision;  // parallel to Cutoffs::precision
  std::vector<double> judged;     // parallel to Cutoffs::judged
};

FamilyScores ScoreFamily(const JudgedRanking& ranking, const Cutoffs& cutoffs);

// Descriptive statistics of the retrieved and relevant segments.
struct CollectionStats {
  int64_t videos_ret = 0;
  int64_t videos_rel = 0;
  int64_t avglength_ret = 0;  // mean duration, rounded to whole seconds
  int64_t avglength_rel = 0;
};

// Statistics over the given queries only.
CollectionStats CountStats(const JudgmentPool& pool,
                           const std::vector<RankedList>& runs,
                           std::span<const std::string> queries);

struct QueryScores {
  std::string query;
  CollectionStats stats;
  std::array<FamilyScores, 3> families;  // indexed by Family

  const FamilyScores& family(Family f) const {
    return families[static_cast<int>(f)];
  }
};

// Means of map/P/Judged and sums of the counts, summed in input order. The
// scope of the result is "all"; stats are left zero since distinct-video
// counts do not aggregate (use CountStats). Throws std::invalid_argument on
// empty input.
QueryScores Aggregate(std::span<const QueryScores> per_query);

}  // namespace segeval
