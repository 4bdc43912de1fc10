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
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "segeval/evaluate.h"

namespace segeval {

// Counts render as plain integers, reals with exactly four decimals.
using MeasureValue = std::variant<int64_t, double>;

struct ReportRow {
  std::string measure;
  std::string scope;  // query id or "all"
  MeasureValue value;
};

// Rows in report order: the per-query blocks (when requested) in evaluation
// order, then the "all" block. A block lists num_q ("all" only), videos_ret,
// videos_rel, avglength_ret, avglength_rel, then for each of the overlap,
// binned and tolerance models num_rel, num_ret, num_rel_ret, map, P_n...,
// Judged_n..., with the "_bin"/"_tol" suffix appended.
std::vector<ReportRow> BuildRows(const Evaluation& evaluation,
                                 const Cutoffs& cutoffs, bool per_query);

// Whether `name` belongs to the report vocabulary for any cutoff values.
bool IsKnownMeasure(std::string_view name);

std::string FormatValue(const MeasureValue& value);

enum class Format { kTsv, kJson };

// Key/value settings echoed into the output (a "#" line in tsv, a "config"
// object in json).
using ReportHeader = std::vector<std::pair<std::string, std::string>>;

// tsv: one `measure<TAB>scope<TAB>value` line per row.
// json: {"config": {...}, "measures": {measure: {scope: value}}}.
// Throws std::logic_error for a measure outside the vocabulary.
std::string Render(std::span<const ReportRow> rows, Format format,
                   const ReportHeader& header = {});

struct TsvRow {
  std::string measure;
  std::string scope;
  std::string value;

  friend bool operator==(const TsvRow&, const TsvRow&) = default;
};

// Reads rendered tsv back; "#" lines are skipped. Throws std::runtime_error
// for lines without exactly three tab-separated columns.
std::vector<TsvRow> ParseTsv(std::string_view text);

}  // namespace segeval
