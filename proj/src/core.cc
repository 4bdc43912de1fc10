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

#include "segeval/core.h"

#include <algorithm>
#include <cmath>

namespace segeval {

bool IsValid(const Segment& segment) {
  return std::isfinite(segment.start) && std::isfinite(segment.end) &&
         segment.start >= 0.0 && segment.start < segment.end;
}

bool Overlaps(const Segment& a, const Segment& b) {
  if (a.video != b.video) return false;
  return std::max(a.start, b.start) < std::min(a.end, b.end);
}

Seconds Duration(const Segment& segment) { return segment.end - segment.start; }

}  // namespace segeval
