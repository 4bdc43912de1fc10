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

#include "segeval/ingest.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <tuple>
#include <unordered_set>

namespace segeval {
namespace {

constexpr std::size_t kQrelFields = 6;
constexpr std::size_t kRunFields = 8;

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    pos = line.find_first_not_of(" \t", pos);
    if (pos == std::string_view::npos) break;
    std::size_t end = line.find_first_of(" \t", pos);
    if (end == std::string_view::npos) end = line.size();
    fields.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return fields;
}

bool IsSkippable(std::string_view line) {
  const std::size_t first = line.find_first_not_of(" \t");
  return first == std::string_view::npos || line[first] == '#';
}

std::string_view StripCarriageReturn(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

[[noreturn]] void Fail(std::size_t line_no, std::string_view what,
                       std::string_view text) {
  throw ParseError(line_no, std::string(what) + ": '" + std::string(text) + "'");
}

bool ParseDouble(std::string_view token, double& value) {
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), last, value);
  return ec == std::errc() && ptr == last;
}

bool ParseInt(std::string_view token, int64_t& value) {
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), last, value);
  return ec == std::errc() && ptr == last;
}

Segment ParseSegment(std::size_t line_no, std::string_view line,
                     std::string_view video, std::string_view start_token,
                     std::string_view end_token) {
  Segment segment{std::string(video), 0.0, 0.0};
  if (!ParseDouble(start_token, segment.start) ||
      !ParseDouble(end_token, segment.end) || !std::isfinite(segment.start) ||
      !std::isfinite(segment.end)) {
    Fail(line_no, "non-numeric time", line);
  }
  if (segment.start < 0.0 || segment.end < 0.0) {
    Fail(line_no, "negative time", line);
  }
  if (segment.start >= segment.end) Fail(line_no, "start >= end", line);
  return segment;
}

std::string FormatNumber(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

void JudgmentPool::Add(Judgment judgment) {
  auto [it, inserted] = index_.try_emplace(judgment.query, queries_.size());
  if (inserted) queries_.push_back(QueryJudgments{judgment.query, {}, {}});
  QueryJudgments& group = queries_[it->second];
  if (judgment.relevant) group.relevant.push_back(judgment.segment);
  group.judged.push_back(std::move(judgment));
}

const QueryJudgments* JudgmentPool::Find(std::string_view query) const {
  auto it = index_.find(std::string(query));
  return it == index_.end() ? nullptr : &queries_[it->second];
}

JudgmentPool ParseQrel(std::istream& in) {
  using Key = std::tuple<std::string, std::string, double, double>;
  std::map<Key, std::size_t> seen;
  JudgmentPool pool;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = StripCarriageReturn(raw);
    if (IsSkippable(line)) continue;
    const auto fields = SplitFields(line);
    if (fields.size() != kQrelFields) {
      Fail(line_no, "expected 6 fields, got " + std::to_string(fields.size()),
           line);
    }
    Segment segment =
        ParseSegment(line_no, line, fields[2], fields[3], fields[4]);
    int64_t relevance = 0;
    if (!ParseInt(fields[5], relevance)) {
      Fail(line_no, "non-integer relevance", line);
    }
    Key key{std::string(fields[0]), segment.video, segment.start, segment.end};
    auto [it, inserted] = seen.emplace(std::move(key), line_no);
    if (!inserted) {
      throw ParseError(line_no, "duplicate judgment (first seen at line " +
                                    std::to_string(it->second) + "): '" +
                                    std::string(line) + "'");
    }
    pool.Add(Judgment{std::string(fields[0]), std::move(segment),
                      relevance > 0});
  }
  return pool;
}

std::vector<RankedList> ParseRun(std::istream& in) {
  std::vector<RankedList> runs;
  std::unordered_map<std::string, std::size_t> index;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = StripCarriageReturn(raw);
    if (IsSkippable(line)) continue;
    const auto fields = SplitFields(line);
    if (fields.size() != kRunFields) {
      Fail(line_no, "expected 8 fields, got " + std::to_string(fields.size()),
           line);
    }
    RunEntry entry;
    entry.query = std::string(fields[0]);
    entry.segment = ParseSegment(line_no, line, fields[2], fields[3], fields[4]);
    if (!ParseInt(fields[5], entry.rank)) Fail(line_no, "non-integer rank", line);
    if (entry.rank < 1) Fail(line_no, "rank < 1", line);
    if (!ParseDouble(fields[6], entry.score)) {
      Fail(line_no, "non-numeric score", line);
    }
    if (!std::isfinite(entry.score)) Fail(line_no, "non-finite score", line);
    entry.run_tag = std::string(fields[7]);

    auto [it, inserted] = index.try_emplace(entry.query, runs.size());
    if (inserted) runs.push_back(RankedList{entry.query, {}});
    runs[it->second].entries.push_back(std::move(entry));
  }
  for (RankedList& list : runs) {
    std::stable_sort(list.entries.begin(), list.entries.end(),
                     [](const RunEntry& a, const RunEntry& b) {
                       return a.score > b.score;
                     });
  }
  return runs;
}

void WriteQrel(const JudgmentPool& pool, std::ostream& out) {
  for (const QueryJudgments& group : pool.queries()) {
    for (const Judgment& j : group.judged) {
      out << j.query << " Q0 " << j.segment.video << ' '
          << FormatNumber(j.segment.start) << ' '
          << FormatNumber(j.segment.end) << ' ' << (j.relevant ? 1 : 0)
          << '\n';
    }
  }
}

void WriteRun(const std::vector<RankedList>& runs, std::ostream& out) {
  for (const RankedList& list : runs) {
    for (const RunEntry& e : list.entries) {
      out << e.query << " Q0 " << e.segment.video << ' '
          << FormatNumber(e.segment.start) << ' '
          << FormatNumber(e.segment.end) << ' ' << e.rank << ' '
          << FormatNumber(e.score) << ' ' << e.run_tag << '\n';
    }
  }
}

EvaluationSet Align(const JudgmentPool& pool,
                    const std::vector<RankedList>& runs) {
  EvaluationSet result;
  std::unordered_set<std::string> retrieved;
  for (const RankedList& list : runs) {
    retrieved.insert(list.query);
    if (pool.Find(list.query) != nullptr) {
      result.queries.push_back(list.query);
    } else {
      result.warnings.push_back("query '" + list.query +
                                "' retrieved but has no judgments; skipped");
    }
  }
  for (const QueryJudgments& group : pool.queries()) {
    if (!retrieved.contains(group.query)) {
      result.warnings.push_back("query '" + group.query +
                                "' judged but never retrieved; skipped");
    }
  }
  if (result.queries.empty()) throw NoEvaluableQueriesError();
  return result;
}

}  // namespace segeval
