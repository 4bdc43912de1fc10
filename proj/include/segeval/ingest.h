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
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "segeval/core.h"

namespace segeval {

// Thrown for malformed qrel/run input. what() is a single line that starts
// with "line N:".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class NoEvaluableQueriesError : public std::runtime_error {
 public:
  NoEvaluableQueriesError() : std::runtime_error("no evaluable queries") {}
};

// Judgments of one query. `relevant` is exactly the relevant subset of
// `judged`, both in file order.
struct QueryJudgments {
  std::string query;
  std::vector<Segment> relevant;
  std::vector<Judgment> judged;
};

// All judgments, grouped by query in first-appearance order.
class JudgmentPool {
 public:
  void Add(Judgment judgment);

  // nullptr when the query has no judgments.
  const QueryJudgments* Find(std::string_view query) const;

  const std::vector<QueryJudgments>& queries() const { return queries_; }
  bool empty() const { return queries_.empty(); }

 private:
  std::vector<QueryJudgments> queries_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Reads `<query> Q0 <video> <start> <end> <relevance>` records. Blank lines
// and lines whose first non-blank character is '#' are skipped. Relevance
// values above 1 are clamped to 1; values <= 0 are judged non-relevant.
JudgmentPool ParseQrel(std::istream& in);

// Reads `<query> Q0 <video> <start> <end> <rank> <score> <run_tag>` records
// and groups them by query (first-appearance order). Each group is sorted by
// descending score, ties in file order.
std::vector<RankedList> ParseRun(std::istream& in);

// Inverse of ParseQrel / ParseRun. Numbers use the shortest representation
// that reads back to the same double.
void WriteQrel(const JudgmentPool& pool, std::ostream& out);
void WriteRun(const std::vector<RankedList>& runs, std::ostream& out);

struct EvaluationSet {
  // Queries judged and retrieved, in run order.
  std::vector<std::string> queries;
  std::vector<std::string> warnings;
};

// Intersects judged and retrieved queries. Throws NoEvaluableQueriesError
// when nothing is left.
EvaluationSet Align(const JudgmentPool& pool,
                    const std::vector<RankedList>& runs);

}  // namespace segeval
