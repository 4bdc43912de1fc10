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
#include <sstream>

#include <gtest/gtest.h>

#include "testkit.h"

namespace segeval {
namespace {

JudgmentPool Qrel(const std::string& text) {
  std::istringstream in(text);
  return ParseQrel(in);
}

std::vector<RankedList> Runs(const std::string& text) {
  std::istringstream in(text);
  return ParseRun(in);
}

std::string ErrorOf(auto&& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

TEST(ParseQrelTest, RelevantRecord) {
  const JudgmentPool pool = Qrel("q1 Q0 v1 10.0 25.0 1\n");
  const QueryJudgments* q1 = pool.Find("q1");
  ASSERT_NE(q1, nullptr);
  ASSERT_EQ(q1->relevant.size(), 1u);
  EXPECT_EQ(q1->relevant[0], (Segment{"v1", 10, 25}));
  EXPECT_EQ(q1->judged.size(), 1u);
}

TEST(ParseQrelTest, NonRelevantRecord) {
  const JudgmentPool pool = Qrel("q1 Q0 v1 10.0 25.0 0\n");
  EXPECT_TRUE(pool.Find("q1")->relevant.empty());
  EXPECT_EQ(pool.Find("q1")->judged.size(), 1u);
}

TEST(ParseQrelTest, GradedRelevanceIsClamped) {
  const JudgmentPool pool = Qrel("q1 Q0 v1 0 5 3\nq1 Q0 v1 5 9 -1\n");
  EXPECT_EQ(pool.Find("q1")->relevant.size(), 1u);
  EXPECT_TRUE(pool.Find("q1")->judged[0].relevant);
  EXPECT_FALSE(pool.Find("q1")->judged[1].relevant);
}

TEST(ParseQrelTest, SkipsCommentsBlanksAndMixedWhitespace) {
  const JudgmentPool pool =
      Qrel("# header\n\n   \n  # indented\nq1\tQ0  v1 \t1.5 2.5\t1\r\n");
  ASSERT_EQ(pool.queries().size(), 1u);
  EXPECT_EQ(pool.Find("q1")->relevant[0], (Segment{"v1", 1.5, 2.5}));
}

TEST(ParseQrelTest, StartAfterEnd) {
  const std::string message = ErrorOf([] { Qrel("q1 Q0 v1 25.0 10.0 1\n"); });
  EXPECT_NE(message.find("line 1"), std::string::npos) << message;
  EXPECT_NE(message.find("start >= end"), std::string::npos) << message;
}

TEST(ParseQrelTest, MalformedLines) {
  struct Case {
    std::string text;
    std::string expected;
  };
  const Case cases[] = {
      {"q1 Q0 v1 10 20\n", "expected 6 fields"},
      {"q1 Q0 v1 10 20 1 extra\n", "expected 6 fields"},
      {"q1 Q0 v1 ten 20 1\n", "non-numeric time"},
      {"q1 Q0 v1 10 inf 1\n", "non-numeric time"},
      {"q1 Q0 v1 -5 20 1\n", "negative time"},
      {"q1 Q0 v1 10 10 1\n", "start >= end"},
      {"q1 Q0 v1 10 20 1.5\n", "non-integer relevance"},
      {"q1 Q0 v1 01:20 20 1\n", "non-numeric time"},
  };
  for (const Case& c : cases) {
    const std::string message = ErrorOf([&] { Qrel("# c\n" + c.text); });
    EXPECT_NE(message.find(c.expected), std::string::npos)
        << c.text << " -> " << message;
    EXPECT_NE(message.find("line 2"), std::string::npos) << message;
  }
}

TEST(ParseQrelTest, DuplicateNamesBothLines) {
  const std::string message = ErrorOf([] {
    Qrel("q1 Q0 v1 10 20 1\nq2 Q0 v1 10 20 1\nq1 Q0 v1 10.0 20.0 0\n");
  });
  EXPECT_NE(message.find("line 3"), std::string::npos) << message;
  EXPECT_NE(message.find("line 1"), std::string::npos) << message;
}

TEST(ParseRunTest, SortsByDescendingScore) {
  const auto runs = Runs("q1 Q0 v1 0 10 1 0.9 r\nq1 Q0 v2 0 10 2 0.95 r\n");
  ASSERT_EQ(runs.size(), 1u);
  EXPECT_EQ(runs[0].entries[0].segment.video, "v2");
  EXPECT_EQ(runs[0].entries[0].rank, 2);
}

TEST(ParseRunTest, TiesKeepFileOrder) {
  const auto runs = Runs(
      "q1 Q0 a 0 10 2 0.5 r\nq1 Q0 b 0 10 1 0.5 r\nq1 Q0 c 0 10 3 0.5 r\n");
  EXPECT_EQ(runs[0].entries[0].segment.video, "a");
  EXPECT_EQ(runs[0].entries[1].segment.video, "b");
  EXPECT_EQ(runs[0].entries[2].segment.video, "c");
}

TEST(ParseRunTest, QueriesInFirstAppearanceOrder) {
  const auto runs = Runs(
      "q2 Q0 a 0 10 1 1 r\nq1 Q0 a 0 10 1 1 r\nq2 Q0 b 0 10 2 2 r\n");
  ASSERT_EQ(runs.size(), 2u);
  EXPECT_EQ(runs[0].query, "q2");
  EXPECT_EQ(runs[1].query, "q1");
  EXPECT_EQ(runs[0].entries[0].segment.video, "b");
}

TEST(ParseRunTest, Errors) {
  EXPECT_NE(ErrorOf([] { Runs("q1 Q0 v1 5 30 1 NaN r1\n"); })
                .find("non-finite score"),
            std::string::npos);
  EXPECT_NE(ErrorOf([] { Runs("q1 Q0 v1 5 30 1 inf r1\n"); })
                .find("non-finite score"),
            std::string::npos);
  EXPECT_NE(ErrorOf([] { Runs("q1 Q0 v1 5 30 0 1 r1\n"); }).find("rank < 1"),
            std::string::npos);
  EXPECT_NE(ErrorOf([] { Runs("q1 Q0 v1 5 30 x 1 r1\n"); })
                .find("non-integer rank"),
            std::string::npos);
  EXPECT_NE(ErrorOf([] { Runs("q1 Q0 v1 5 30 1 high r1\n"); })
                .find("non-numeric score"),
            std::string::npos);
  EXPECT_NE(ErrorOf([] { Runs("q1 Q0 v1 5 30 1 1\n"); })
                .find("expected 8 fields"),
            std::string::npos);
  EXPECT_NE(ErrorOf([] { Runs("q1 Q0 v1 30 5 1 1 r\n"); }).find("start >= end"),
            std::string::npos);
}

TEST(AlignTest, JudgedButNotRetrieved) {
  const JudgmentPool pool = Qrel("q1 Q0 v 0 1 1\nq2 Q0 v 0 1 1\n");
  const auto runs = Runs("q1 Q0 v 0 1 1 1 r\n");
  const EvaluationSet set = Align(pool, runs);
  EXPECT_EQ(set.queries, std::vector<std::string>{"q1"});
  ASSERT_EQ(set.warnings.size(), 1u);
  EXPECT_NE(set.warnings[0].find("q2"), std::string::npos);
}

TEST(AlignTest, RetrievedButNotJudged) {
  const JudgmentPool pool = Qrel("q1 Q0 v 0 1 1\n");
  const auto runs = Runs("q1 Q0 v 0 1 1 1 r\nq3 Q0 v 0 1 1 1 r\n");
  const EvaluationSet set = Align(pool, runs);
  EXPECT_EQ(set.queries, std::vector<std::string>{"q1"});
  ASSERT_EQ(set.warnings.size(), 1u);
  EXPECT_NE(set.warnings[0].find("q3"), std::string::npos);
}

TEST(AlignTest, EmptyIntersectionIsFatal) {
  const JudgmentPool pool = Qrel("q1 Q0 v 0 1 1\n");
  const auto runs = Runs("q2 Q0 v 0 1 1 1 r\n");
  EXPECT_THROW(Align(pool, runs), NoEvaluableQueriesError);
}

TEST(AlignTest, RunOrderIsKept) {
  const JudgmentPool pool = Qrel("q1 Q0 v 0 1 1\nq2 Q0 v 0 1 1\n");
  const auto runs = Runs("q2 Q0 v 0 1 1 1 r\nq1 Q0 v 0 1 1 1 r\n");
  EXPECT_EQ(Align(pool, runs).queries,
            (std::vector<std::string>{"q2", "q1"}));
}

// Write/parse round trip and permutation invariants over generated inputs.
TEST(IngestPropertyTest, RoundTripAndPermutation) {
  for (uint64_t seed = 1; seed <= 50; ++seed) {
    testkit::SyntheticSpec spec;
    spec.seed = seed;
    spec.queries = 4;
    spec.results_max = 20;
    const testkit::Instance inst = testkit::Generate(spec);

    std::ostringstream qrel_out, run_out;
    WriteQrel(inst.pool, qrel_out);
    WriteRun(inst.runs, run_out);
    const JudgmentPool pool = Qrel(qrel_out.str());
    const auto runs = Runs(run_out.str());
    ASSERT_EQ(runs, inst.runs);
    ASSERT_EQ(pool.queries().size(), inst.pool.queries().size());
    for (std::size_t q = 0; q < pool.queries().size(); ++q) {
      const QueryJudgments& a = pool.queries()[q];
      const QueryJudgments& b = inst.pool.queries()[q];
      ASSERT_EQ(a.query, b.query);
      ASSERT_EQ(a.judged, b.judged);
      ASSERT_EQ(a.relevant, b.relevant);
      ASSERT_LE(a.relevant.size(), a.judged.size());
    }

    // Each ranked list is a permutation of that query's input lines.
    const auto raw = Runs(inst.run_text);
    std::size_t lines = std::count(inst.run_text.begin(), inst.run_text.end(), '\n');
    std::size_t parsed = 0;
    for (const RankedList& list : raw) {
      parsed += list.entries.size();
      std::vector<int64_t> ranks;
      for (const RunEntry& e : list.entries) ranks.push_back(e.rank);
      std::sort(ranks.begin(), ranks.end());
      for (std::size_t i = 0; i < ranks.size(); ++i) {
        ASSERT_EQ(ranks[i], static_cast<int64_t>(i + 1));
      }
      ASSERT_TRUE(std::is_sorted(
          list.entries.begin(), list.entries.end(),
          [](const RunEntry& a, const RunEntry& b) { return a.score > b.score; }));
    }
    ASSERT_EQ(parsed, lines);
  }
}

}  // namespace
}  // namespace segeval
