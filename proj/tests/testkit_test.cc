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

#include "testkit.h"

#include <gtest/gtest.h>

#include "segeval/mapping.h"

namespace segeval::testkit {
namespace {

TEST(GenerateTest, DeterministicForSeed) {
  SyntheticSpec spec;
  spec.seed = 42;
  const Instance a = Generate(spec);
  const Instance b = Generate(spec);
  EXPECT_EQ(a.qrel_text, b.qrel_text);
  EXPECT_EQ(a.run_text, b.run_text);
  spec.seed = 43;
  EXPECT_NE(Generate(spec).run_text, a.run_text);
}

TEST(GenerateTest, FixedLength) {
  SyntheticSpec spec;
  spec.length_min = spec.length_max = 17;
  spec.queries = 4;
  const Instance inst = Generate(spec);
  for (const QueryJudgments& q : inst.pool.queries()) {
    for (const Judgment& j : q.judged) {
      EXPECT_EQ(Duration(j.segment), 17.0);
      EXPECT_TRUE(IsValid(j.segment));
    }
  }
  for (const RankedList& list : inst.runs) {
    for (const RunEntry& e : list.entries) {
      EXPECT_EQ(Duration(e.segment), 17.0);
      EXPECT_TRUE(IsValid(e.segment));
    }
  }
}

TEST(GenerateTest, ExtraQueries) {
  SyntheticSpec spec;
  spec.queries = 2;
  spec.run_only_queries = 1;
  spec.qrel_only_queries = 2;
  const Instance inst = Generate(spec);
  EXPECT_EQ(inst.pool.queries().size(), 4u);
  EXPECT_EQ(inst.runs.size(), 3u);
  EXPECT_EQ(Align(inst.pool, inst.runs).queries.size(), 2u);
}

TEST(GenerateTest, RejectsBadSpec) {
  SyntheticSpec spec;
  spec.results_min = 0;
  EXPECT_THROW(Generate(spec), std::invalid_argument);
  spec = SyntheticSpec{};
  spec.length_min = 50;
  spec.length_max = 10;
  EXPECT_THROW(Generate(spec), std::invalid_argument);
  spec = SyntheticSpec{};
  spec.timeline = spec.length_max;
  EXPECT_THROW(Generate(spec), std::invalid_argument);
}

TEST(OracleTest, RefusesLargeInstances) {
  SyntheticSpec spec;
  spec.results_min = spec.results_max = 9;
  const Instance inst = Generate(spec);
  EXPECT_THROW(OracleEvaluate(inst.pool, inst.runs, OracleConfig{}),
               std::invalid_argument);
}

std::vector<int> Bits(const std::vector<OracleItem>& items) {
  std::vector<int> out;
  for (const OracleItem& item : items) out.push_back(item.relevant);
  return out;
}

TEST(OracleTest, WalkthroughStrings) {
  OracleConfig cfg;
  cfg.bin_size = 60;
  cfg.window = 10;
  const Fixture overlap = DoubleHitExample();
  EXPECT_EQ(Bits(OracleRelevance(overlap.judgments, overlap.run, cfg).overlap),
            (std::vector<int>{0, 1, 0, 1}));
  const Fixture binned = BinMergeExample();
  EXPECT_EQ(Bits(OracleRelevance(binned.judgments, binned.run, cfg).binned),
            (std::vector<int>{0, 1}));
  const Fixture tolerance = SeenOnceExample();
  EXPECT_EQ(
      Bits(OracleRelevance(tolerance.judgments, tolerance.run, cfg).tolerance),
      (std::vector<int>{0, 1, 0, 0}));
}

}  // namespace
}  // namespace segeval::testkit
