// Copyright 2026 The Subpart Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "subpart/robust/greedy.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "subpart/functions/functions.h"
#include "test_util.h"

namespace subpart {
namespace {

using testing::CardinalityDefinition;
using testing::CoverDefinition;
using testing::ExhaustiveOptimum;
using testing::MaxBlock;
using testing::MinBlock;
using testing::ModularDefinition;

// Items 0,1 cover key a; items 2,3 cover key b.
OraclePtr PairedCover() { return CoverDefinition({{0}, {0}, {1}, {1}}); }

TEST(GreedMaxTest, Cardinality) {
  const auto f = CardinalityDefinition(4);
  EXPECT_EQ(MinBlock({f}, GreedMax(*f, 2)), 2.0);
}

TEST(GreedMaxTest, SingleBlockTakesEverything) {
  const auto f = ModularDefinition({1, 2, 3});
  const Partition p = GreedMax(*f, 1);
  EXPECT_EQ(p.BlockSizes(), (std::vector<int>{3}));
  EXPECT_EQ(MinBlock({f}, p), 6.0);
}

TEST(GreedMaxTest, PairedCover) {
  const auto f = PairedCover();
  const Partition p = GreedMax(*f, 2);
  EXPECT_EQ(MinBlock({f}, p), 2.0);
  EXPECT_EQ(ExhaustiveOptimum({f}, 2, Direction::kMaxMinAvg, 0.0).value, 2.0);
}

TEST(GreedMaxTest, RejectsZeroBlocks) {
  const auto f = CardinalityDefinition(3);
  EXPECT_THROW(GreedMax(*f, 0), std::invalid_argument);
}

TEST(GreedMaxTest, LazyMatchesPlainScan) {
  std::mt19937 gen(51);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + trial % 9;
    const int m = 2 + trial % 3;
    const OraclePtr f =
        trial % 2 == 0
            ? FacilityLocation(
                  SimilarityMatrix::FromRows(testing::RandomSymmetric(n, gen)))
            : SetCover(BipartiteCover::Make(
                  6, testing::RandomCover(n, 6, 0.3, gen)));
    EXPECT_EQ(GreedMax(*f, m, {.lazy = true}), GreedMax(*f, m, {.lazy = false}))
        << "trial " << trial;
  }
}

TEST(GreedMaxTest, AtLeastOptimumOverM) {
  std::mt19937 gen(52);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 5 + trial % 3;
    const int m = 2 + trial % 2;
    const auto f = testing::FacilityDefinition(testing::RandomSymmetric(n, gen));
    const double opt = ExhaustiveOptimum({f}, m, Direction::kMaxMinAvg, 0.0).value;
    EXPECT_GE(MinBlock({f}, GreedMax(*f, m)), opt / m - 1e-9);
  }
}

TEST(StreamGreedTest, Examples) {
  const auto card = CardinalityDefinition(4);
  const std::vector<int> order{3, 1, 0, 2};
  EXPECT_EQ(StreamGreed(*card, 2, order).BlockSizes(), (std::vector<int>{2, 2}));
  EXPECT_EQ(StreamGreed(*card, 1, order).BlockSizes(), (std::vector<int>{4}));

  const auto w = ModularDefinition({4, 1, 1, 1, 1});
  const std::vector<int> descending{0, 1, 2, 3, 4};
  EXPECT_EQ(MinBlock({w}, StreamGreed(*w, 2, descending)), 4.0);
}

TEST(StreamGreedTest, RejectsNonPermutation) {
  const auto f = CardinalityDefinition(3);
  EXPECT_THROW(StreamGreed(*f, 2, std::vector<int>{0, 0, 1}),
               std::invalid_argument);
  EXPECT_THROW(StreamGreed(*f, 2, std::vector<int>{0, 1}),
               std::invalid_argument);
  EXPECT_THROW(StreamGreed(*f, 2, std::vector<int>{0, 1, 3}),
               std::invalid_argument);
}

TEST(GreedSwpTest, ZeroTruncationPutsEverythingInBlockZero) {
  const auto f = CardinalityDefinition(5);
  const Partition p = GreedSwp({f}, 3, 0.0);
  EXPECT_EQ(p.BlockSizes(), (std::vector<int>{5, 0, 0}));
  EXPECT_EQ(TruncatedWelfare({f}, p, 0.0), 0.0);
}

TEST(GreedSwpTest, UntruncatedCardinalityWelfareIsN) {
  const auto f = CardinalityDefinition(6);
  const Partition p = GreedSwp({f}, 3);
  const auto values = testing::BlockValues({f}, p);
  EXPECT_EQ(std::accumulate(values.begin(), values.end(), 0.0), 6.0);
}

TEST(GreedSwpTest, HeterogeneousModular) {
  const std::vector<OraclePtr> fs{ModularDefinition({1, 0}),
                                  ModularDefinition({0, 1})};
  const Partition p = GreedSwp(fs, 2, 1.0);
  EXPECT_EQ(p.assignment(), (std::vector<int>{0, 1}));
  EXPECT_EQ(TruncatedWelfare(fs, p, 1.0), 1.0);
}

TEST(GreedSwpTest, LazyMatchesPlainScan) {
  std::mt19937 gen(53);
  std::uniform_real_distribution<double> level(0.5, 4.0);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + trial % 9;
    const int m = 2 + trial % 3;
    std::vector<OraclePtr> fs;
    for (int i = 0; i < (trial % 2 ? m : 1); ++i) {
      fs.push_back(FacilityLocation(
          SimilarityMatrix::FromRows(testing::RandomSymmetric(n, gen))));
    }
    const double c = trial % 5 == 0 ? std::numeric_limits<double>::infinity()
                                    : level(gen);
    EXPECT_EQ(GreedSwp(fs, m, c, {.lazy = true}),
              GreedSwp(fs, m, c, {.lazy = false}))
        << "trial " << trial;
  }
}

TEST(GreedSwpTest, RejectsBadArguments) {
  const auto f = CardinalityDefinition(3);
  EXPECT_THROW(GreedSwp({f}, 2, -1.0), std::invalid_argument);
  EXPECT_THROW(GreedSwp({f, f, f}, 2), std::invalid_argument);
  EXPECT_THROW(GreedSwp({f, CardinalityDefinition(4)}, 2), std::invalid_argument);
}

TEST(GreedMinTest, Examples) {
  const auto card = CardinalityDefinition(4);
  EXPECT_EQ(MaxBlock({card}, GreedMin(*card, 2)), 2.0);
  const auto w = ModularDefinition({1, 2, 3});
  EXPECT_EQ(MaxBlock({w}, GreedMin(*w, 1)), 6.0);
}

TEST(GreedMinTest, PairedCoverWithinMTimesOptimum) {
  const auto f = PairedCover();
  const double opt = ExhaustiveOptimum({f}, 2, Direction::kMinMaxAvg, 0.0).value;
  EXPECT_EQ(opt, 1.0);
  EXPECT_LE(MaxBlock({f}, GreedMin(*f, 2)), 2.0 * opt);
}

TEST(GreedMinTest, ExhaustiveBound) {
  std::mt19937 gen(54);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 5 + trial % 3;
    const int m = 2 + trial % 2;
    const auto f = CoverDefinition(testing::RandomCover(n, 8, 0.35, gen));
    const double opt = ExhaustiveOptimum({f}, m, Direction::kMinMaxAvg, 0.0).value;
    EXPECT_LE(MaxBlock({f}, GreedMin(*f, m)), m * opt + 1e-9);
  }
}

TEST(GreedMinTest, SubsampleIsDeterministicPerSeed) {
  std::mt19937 gen(55);
  const auto f = FacilityLocation(
      SimilarityMatrix::FromRows(testing::RandomSymmetric(30, gen)));
  const GreedMinOptions options{.subsample = 5, .seed = 9};
  const Partition a = GreedMin(*f, 3, options);
  EXPECT_EQ(a, GreedMin(*f, 3, options));
  const auto sizes = a.BlockSizes();
  EXPECT_EQ(std::accumulate(sizes.begin(), sizes.end(), 0), 30);
  // A sample at least as large as the remaining set is the full scan.
  EXPECT_EQ(GreedMin(*f, 3, {.subsample = 30, .seed = 1}), GreedMin(*f, 3));
  EXPECT_THROW(GreedMin(*f, 3, {.subsample = 0}), std::invalid_argument);
}

TEST(BalancedRandomPartitionTest, SizesAndDeterminism) {
  for (int n = 1; n <= 20; ++n) {
    for (int m = 1; m <= n; ++m) {
      const Partition p = BalancedRandomPartition(n, m, 1000 * n + m);
      const auto sizes = p.BlockSizes();
      EXPECT_LE(*std::max_element(sizes.begin(), sizes.end()) -
                    *std::min_element(sizes.begin(), sizes.end()),
                1);
    }
  }
  EXPECT_EQ(BalancedRandomPartition(10, 3, 4), BalancedRandomPartition(10, 3, 4));
  EXPECT_NE(BalancedRandomPartition(10, 3, 4), BalancedRandomPartition(10, 3, 5));
  EXPECT_EQ(BalancedRandomPartition(4, 2, 0).BlockSizes(), (std::vector<int>{2, 2}));
  EXPECT_THROW(BalancedRandomPartition(2, 3, 0), std::invalid_argument);
}

}  // namespace
}  // namespace subpart
