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

#include "segeval/report.h"

#include <array>
#include <charconv>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace segeval {
namespace {

void AppendFamily(std::vector<ReportRow>& rows, const std::string& scope,
                  const FamilyScores& scores, const Cutoffs& cutoffs,
                  const std::string& suffix) {
  rows.push_back({"num_rel" + suffix, scope, scores.num_rel});
  rows.push_back({"num_ret" + suffix, scope, scores.num_ret});
  rows.push_back({"num_rel_ret" + suffix, scope, scores.num_rel_ret});
  rows.push_back({"map" + suffix, scope, scores.map});
  for (std::size_t i = 0; i < cutoffs.precision.size(); ++i) {
    rows.push_back({"P_" + std::to_string(cutoffs.precision[i]) + suffix, scope,
                    scores.precision.at(i)});
  }
  for (std::size_t i = 0; i < cutoffs.judged.size(); ++i) {
    rows.push_back({"Judged_" + std::to_string(cutoffs.judged[i]) + suffix,
                    scope, scores.judged.at(i)});
  }
}

void AppendBlock(std::vector<ReportRow>& rows, const QueryScores& scores,
                 const Cutoffs& cutoffs, const std::string& scope) {
  rows.push_back({"videos_ret", scope, scores.stats.videos_ret});
  rows.push_back({"videos_rel", scope, scores.stats.videos_rel});
  rows.push_back({"avglength_ret", scope, scores.stats.avglength_ret});
  rows.push_back({"avglength_rel", scope, scores.stats.avglength_rel});
  for (Family f : kFamilies) {
    AppendFamily(rows, scope, scores.family(f), cutoffs, Suffix(f));
  }
}

bool IsPositiveInteger(std::string_view text) {
  if (text.empty() || text.front() < '1' || text.front() > '9') return false;
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

std::vector<ReportRow> BuildRows(const Evaluation& evaluation,
                                 const Cutoffs& cutoffs, bool per_query) {
  std::vector<ReportRow> rows;
  if (per_query) {
    for (const QueryScores& q : evaluation.per_query) {
      AppendBlock(rows, q, cutoffs, q.query);
    }
  }
  rows.push_back({"num_q", "all", evaluation.num_q});
  AppendBlock(rows, evaluation.all, cutoffs, "all");
  return rows;
}

bool IsKnownMeasure(std::string_view name) {
  static constexpr std::array<std::string_view, 5> kCollection = {
      "num_q", "videos_ret", "videos_rel", "avglength_ret", "avglength_rel"};
  for (std::string_view known : kCollection) {
    if (name == known) return true;
  }
  for (std::string_view suffix : {"_bin", "_tol"}) {
    if (name.ends_with(suffix)) {
      name.remove_suffix(suffix.size());
      break;
    }
  }
  if (name == "num_rel" || name == "num_ret" || name == "num_rel_ret" ||
      name == "map") {
    return true;
  }
  for (std::string_view prefix : {"P_", "Judged_"}) {
    if (name.starts_with(prefix)) {
      return IsPositiveInteger(name.substr(prefix.size()));
    }
  }
  return false;
}

std::string FormatValue(const MeasureValue& value) {
  if (const auto* count = std::get_if<int64_t>(&value)) {
    return std::to_string(*count);
  }
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.4f", std::get<double>(value));
  return buffer;
}

std::string Render(std::span<const ReportRow> rows, Format format,
                   const ReportHeader& header) {
  for (const ReportRow& row : rows) {
    if (!IsKnownMeasure(row.measure)) {
      throw std::logic_error("unknown measure '" + row.measure + "'");
    }
  }

  if (format == Format::kJson) {
    nlohmann::ordered_json doc;
    doc["config"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : header) doc["config"][key] = value;
    auto& measures = doc["measures"] = nlohmann::ordered_json::object();
    for (const ReportRow& row : rows) {
      std::visit([&](auto v) { measures[row.measure][row.scope] = v; },
                 row.value);
    }
    return doc.dump(2) + "\n";
  }

  std::string out;
  if (!header.empty()) {
    out += "#";
    for (const auto& [key, value] : header) {
      out += " " + key + "=" + value;
    }
    out += "\n";
  }
  for (const ReportRow& row : rows) {
    out += row.measure;
    out += '\t';
    out += row.scope;
    out += '\t';
    out += FormatValue(row.value);
    out += '\n';
  }
  return out;
}

std::vector<TsvRow> ParseTsv(std::string_view text) {
  std::vector<TsvRow> rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t first = line.find('\t');
    const std::size_t second =
        first == std::string_view::npos ? first : line.find('\t', first + 1);
    if (second == std::string_view::npos ||
        line.find('\t', second + 1) != std::string_view::npos) {
      throw std::runtime_error("report line " + std::to_string(line_no) +
                               ": expected 3 tab-separated columns");
    }
    rows.push_back({std::string(line.substr(0, first)),
                    std::string(line.substr(first + 1, second - first - 1)),
                    std::string(line.substr(second + 1))});
  }
  return rows;
}

}  // namespace segeval
