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

namespace segeval {

// Time positions and durations, in seconds.
using Seconds = double;

// A time interval [start, end) inside one video. Valid segments satisfy
// 0 <= start < end; see IsValid().
struct Segment {
  std::string video;
  Seconds start = 0.0;
  Seconds end = 0.0;

  friend bool operator==(const Segment&, const Segment&) = default;
};

bool IsValid(const Segment& segment);

// True iff both segments lie in the same video and share a strictly positive
// stretch of time. Touching endpoints do not overlap.
bool Overlaps(const Segment& a, const Segment& b);

Seconds Duration(const Segment& segment);

// One judged segment for a query. Relevance is binary.
struct Judgment {
  std::string query;
  Segment segment;
  bool relevant = false;

  friend bool operator==(const Judgment&, const Judgment&) = default;
};

// One line of a run file.
struct RunEntry {
  std::string query;
  Segment segment;
  int64_t rank = 1;  // as read from the file; ordering uses score
  double score = 0.0;
  std::string run_tag;

  friend bool operator==(const RunEntry&, const RunEntry&) = default;
};

// Results for one query, best score first. Equal scores keep file order.
struct RankedList {
  std::string query;
  std::vector<RunEntry> entries;

  friend bool operator==(const RankedList&, const RankedList&) = default;
};

}  // namespace segeval
