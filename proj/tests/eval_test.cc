// Copyright 2026 The defclust Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "defclust/eval.h"

#include <random>
#include <sstream>

#include "defclust/error.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "testing/oracles.h"

namespace defclust {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;
using ::testing::IsEmpty;

Clustering Groups(std::vector<std::vector<std::size_t>> groups,
                  std::vector<std::size_t> ungrouped, double alpha = 0.5) {
  Clustering c;
  c.alpha = alpha;
  c.groups = std::move(groups);
  c.ungrouped = std::move(ungrouped);
  return c;
}

TEST(RecallTest, FractionOfGroupedDocuments) {
  const Clustering c = Groups({{0, 1, 2}, {3, 4}}, {5, 6, 7, 8, 9});
  EXPECT_EQ(Recall(c, 10), 0.5);
}

TEST(RecallTest, NoGroupsIsZero) {
  EXPECT_EQ(Recall(Groups({}, {0, 1, 2}), 3), 0.0);
}

TEST(RecallTest, AbsoluteGroupIsOne) {
  EXPECT_EQ(Recall(Groups({{0, 1, 2, 3}}, {}, 1.0), 4), 1.0);
}

TEST(RecallTest, Errors) {
  EXPECT_THROW(Recall(Groups({}, {}), 0), std::invalid_argument);
  EXPECT_THROW(Recall(Groups({{0, 1, 2}}, {}), 2), std::invalid_argument);
}

TEST(IntrudersTest, MinorityLabelsAreIntruders) {
  const std::vector<std::string> labels = {"s1", "s1", "s2"};
  EXPECT_THAT(IdentifyIntruders(Groups({{0, 1, 2}}, {}), labels),
              ElementsAre(2));
}

TEST(IntrudersTest, TieGoesToTheLowestMember) {
  const std::vector<std::string> labels = {"s2", "s1", "x", "s1", "s2"};
  EXPECT_THAT(IdentifyIntruders(Groups({{0, 1}}, {2, 3, 4}), labels),
              ElementsAre(1));
  // s1 and s2 tie at two; item 0 is "x" so the first tied label met is s1.
  const std::vector<std::string> mixed = {"x", "s1", "s2", "s1", "s2"};
  EXPECT_THAT(IdentifyIntruders(Groups({{0, 1, 2, 3, 4}}, {}), mixed),
              ElementsAre(0, 2, 4));
}

TEST(IntrudersTest, PureGroupsHaveNone) {
  const std::vector<std::string> labels = {"a", "a", "b", "b", "c"};
  EXPECT_THAT(IdentifyIntruders(Groups({{0, 1}, {2, 3}}, {4}), labels),
              IsEmpty());
}

TEST(IntrudersTest, GoldKeyedById) {
  GoldAnnotation gold;
  gold.sense_of = {{"a", "s1"}, {"b", "s1"}, {"c", "s2"}};
  const std::vector<std::string> ids = {"a", "b", "c", "unlabeled"};
  EXPECT_THAT(IdentifyIntruders(Groups({{0, 1, 2}}, {3}), ids, gold),
              ElementsAre(2));
  try {
    IdentifyIntruders(Groups({{2, 3}}, {0, 1}), ids, gold);
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_THAT(e.what(), HasSubstr("unlabeled"));
  }
}

TEST(PrecisionTest, Arithmetic) {
  const std::vector<std::size_t> one = {4};
  EXPECT_DOUBLE_EQ(Precision(Groups({{0, 1, 2}, {3, 4}}, {5}), one), 0.8);
}

TEST(PrecisionTest, NoIntrudersIsOne) {
  EXPECT_EQ(Precision(Groups({{0, 1}}, {2}), {}), 1.0);
}

TEST(PrecisionTest, NoGroupsIsZero) {
  EXPECT_EQ(Precision(Groups({}, {0, 1}), {}), 0.0);
}

TEST(PrecisionTest, IntruderMustBeGrouped) {
  const std::vector<std::size_t> stray = {2};
  EXPECT_THROW(Precision(Groups({{0, 1}}, {2}), stray), std::invalid_argument);
}

TEST(ZoneTest, Classification) {
  EXPECT_EQ(ClassifyZone(0.0), Zone::kZone1);
  EXPECT_EQ(ClassifyZone(0.5), Zone::kZone1);
  EXPECT_EQ(ClassifyZone(0.70), Zone::kZone1);
  EXPECT_EQ(ClassifyZone(0.71), Zone::kZone2);
  EXPECT_EQ(ClassifyZone(0.80), Zone::kZone2);
  EXPECT_EQ(ClassifyZone(0.85), Zone::kZone2);
  EXPECT_EQ(ClassifyZone(0.86), Zone::kZone3);
  EXPECT_EQ(ClassifyZone(0.90), Zone::kZone3);
  EXPECT_EQ(ClassifyZone(0.99), Zone::kZone3);
  EXPECT_EQ(ClassifyZone(1.0), Zone::kAbsolute);
  // Grid values built as integer / 100 land on the same side.
  EXPECT_EQ(ClassifyZone(70 / 100.0), Zone::kZone1);
  EXPECT_EQ(ClassifyZone(85 / 100.0), Zone::kZone2);
}

TEST(SweepGridTest, DefaultHasOneHundredExactPoints) {
  const SweepGrid grid = SweepGrid::Default();
  ASSERT_EQ(grid.size(), 100u);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    EXPECT_EQ(grid.AlphaAt(k), static_cast<double>(k + 1) / 100.0);
  }
  EXPECT_EQ(grid.AlphaAt(99), 1.0);
  EXPECT_EQ(grid.decimals(), 2);
}

TEST(SweepGridTest, Parse) {
  const SweepGrid g = SweepGrid::Parse("0.01:1.00:0.01");
  EXPECT_EQ(g.size(), 100u);
  const SweepGrid single = SweepGrid::Parse("0.5:0.5:0.01");
  EXPECT_EQ(single.size(), 1u);
  EXPECT_EQ(single.AlphaAt(0), 0.5);
  const SweepGrid fine = SweepGrid::Parse("0.1:0.2:0.005");
  EXPECT_EQ(fine.size(), 21u);
  EXPECT_EQ(fine.decimals(), 3);
  EXPECT_EQ(fine.AlphaAt(1), 0.105);
  EXPECT_EQ(SweepGrid::Parse("0.5:1:0.25").size(), 3u);
}

TEST(SweepGridTest, RejectsInvalidGrids) {
  EXPECT_THROW(SweepGrid::Parse("0:1:0.01"), std::invalid_argument);
  EXPECT_THROW(SweepGrid::Parse("0.6:0.5:0.01"), std::invalid_argument);
  EXPECT_THROW(SweepGrid::Parse("0.1:1.5:0.01"), std::invalid_argument);
  EXPECT_THROW(SweepGrid::Parse("0.1:0.5:0"), std::invalid_argument);
  EXPECT_THROW(SweepGrid::Parse("0.1:0.5"), std::invalid_argument);
  EXPECT_THROW(SweepGrid::Parse("a:0.5:0.1"), std::invalid_argument);
  EXPECT_THROW(SweepGrid::Parse("-0.1:0.5:0.1"), std::invalid_argument);
  EXPECT_THROW(SweepGrid::FromValues(0.011, 0.5, 0.01), std::invalid_argument);
  EXPECT_EQ(SweepGrid::FromValues(0.01, 1.0, 0.01).size(), 100u);
}

TEST(GoldAnnotationTest, ParseAndConflicts) {
  std::istringstream ok(R"({"id":"a","sense":"s1"})"
                        "\n\n"
                        R"({"id":"b","sense":"s2"})"
                        "\n");
  const GoldAnnotation gold = GoldAnnotation::Parse(ok, "gold");
  EXPECT_EQ(gold.sense_of.size(), 2u);
  const std::vector<std::string> ids = {"b", "a"};
  EXPECT_THAT(gold.LabelsFor(ids), ElementsAre("s2", "s1"));
  const std::vector<std::string> missing = {"c"};
  EXPECT_THROW(gold.LabelsFor(missing), DataError);

  std::istringstream conflict(R"({"id":"a","sense":"s1"})"
                              "\n"
                              R"({"id":"a","sense":"s2"})");
  EXPECT_THROW(GoldAnnotation::Parse(conflict, "gold"), DataError);
  std::istringstream bad(R"({"id":"a"})");
  EXPECT_THROW(GoldAnnotation::Parse(bad, "gold"), DataError);
}

// Two well separated senses of four items each.
struct SweepFixture {
  PairwiseDistances distances;
  std::vector<std::string> ids;
  GoldAnnotation gold;
};

SweepFixture TwoSenses() {
  const std::size_t n = 8;
  std::vector<double> values;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool same = (i < 4) == (j < 4);
      values.push_back(same ? 0.1 * static_cast<double>(j - i)
                            : 0.9 + 0.01 * static_cast<double>(i % 3));
    }
  }
  SweepFixture f{PairwiseDistances(n, std::move(values)), {}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    f.ids.push_back("d" + std::to_string(i));
    f.gold.sense_of[f.ids.back()] = i < 4 ? "left" : "right";
  }
  return f;
}

TEST(RunSweepTest, DefaultGridRows) {
  const SweepFixture f = TwoSenses();
  const auto rows = RunSweep(BuildDendrogram(f.distances), f.ids, f.gold);
  ASSERT_EQ(rows.size(), 100u);
  EXPECT_EQ(rows.front().alpha, 0.01);
  EXPECT_EQ(rows.front().num_groups, 0u);
  EXPECT_EQ(rows.front().precision, 0.0);
  EXPECT_EQ(rows.front().recall, 0.0);
  EXPECT_EQ(rows.back().alpha, 1.0);
  EXPECT_EQ(rows.back().num_groups, 1u);
  EXPECT_EQ(rows.back().recall, 1.0);
  EXPECT_EQ(rows.back().precision, 0.5);
  EXPECT_EQ(rows.back().zone, Zone::kAbsolute);
  // Both senses fully grouped and pure before the cross distances kick in.
  EXPECT_EQ(rows[49].num_groups, 2u);
  EXPECT_EQ(rows[49].precision, 1.0);
  EXPECT_EQ(rows[49].recall, 1.0);
}

TEST(RunSweepTest, RowInvariants) {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 20; ++round) {
    const std::size_t n = 3 + round % 12;
    const PairwiseDistances d = testing::RandomHundredthDistances(rng, n);
    std::vector<std::string> ids;
    GoldAnnotation gold;
    for (std::size_t i = 0; i < n; ++i) {
      ids.push_back(std::to_string(i));
      gold.sense_of[ids.back()] = "s" + std::to_string(i % 3);
    }
    const auto rows = RunSweep(BuildDendrogram(d), ids, gold);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const EvalRow& r = rows[k];
      EXPECT_GE(r.precision, 0.0);
      EXPECT_LE(r.precision, 1.0);
      EXPECT_GE(r.recall, 0.0);
      EXPECT_LE(r.recall, 1.0);
      if (r.num_groups == 0) {
        EXPECT_EQ(r.precision, 0.0);
        EXPECT_EQ(r.recall, 0.0);
      }
      if (k > 0) {
        EXPECT_GE(r.recall, rows[k - 1].recall);
      }
      const Clustering c = CutAtThreshold(BuildDendrogram(d), r.alpha);
      EXPECT_EQ(r.recall + static_cast<double>(c.ungrouped.size()) /
                               static_cast<double>(n),
                1.0);
    }
  }
}

TEST(RunSweepTest, SinglePointGrid) {
  const SweepFixture f = TwoSenses();
  const auto rows = RunSweep(BuildDendrogram(f.distances), f.ids, f.gold,
                             SweepGrid::Parse("0.5:0.5:0.01"));
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].alpha, 0.5);
}

TEST(RunSweepTest, Errors) {
  const SweepFixture f = TwoSenses();
  const Dendrogram t = BuildDendrogram(f.distances);
  SweepGrid bad;
  bad.step = 0;
  EXPECT_THROW(RunSweep(t, f.ids, f.gold, bad), std::invalid_argument);
  GoldAnnotation partial = f.gold;
  partial.sense_of.erase("d3");
  EXPECT_THROW(RunSweep(t, f.ids, partial), DataError);
  const std::vector<std::string> short_ids(f.ids.begin(), f.ids.end() - 1);
  EXPECT_THROW(RunSweep(t, short_ids, f.gold), std::invalid_argument);
}

}  // namespace
}  // namespace defclust
