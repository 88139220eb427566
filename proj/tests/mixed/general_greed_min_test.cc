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

#include "subpart/mixed/general_greed_min.h"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include <gtest/gtest.h>

#include "subpart/functions/functions.h"
#include "test_util.h"

namespace subpart {
namespace {

using testing::CardinalityDefinition;
using testing::FacilityDefinition;
using testing::ModularDefinition;

TEST(SeedSelectTest, Examples) {
  EXPECT_EQ(SeedSelect(*CardinalityDefinition(3), 3),
            (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(SeedSelect(*ModularDefinition({5, 1, 1}), 1), (std::vector<int>{0}));
  // f({0}) = f({1}) = 1.9 and f({2}) = 1; after 0 the gain of 2 is 1, of 1
  // only 0.1.
  const auto f = FacilityDefinition({{1, 0.9, 0}, {0.9, 1, 0}, {0, 0, 1}});
  EXPECT_EQ(SeedSelect(*f, 2), (std::vector<int>{0, 2}));
}

TEST(SeedSelectTest, Rejects) {
  const auto f = CardinalityDefinition(2);
  EXPECT_THROW(SeedSelect(*f, 3), std::invalid_argument);
  EXPECT_THROW(SeedSelect(*f, 0), std::invalid_argument);
}

TEST(GeneralGreedMinTest, TwoItemFacility) {
  const auto f = FacilityDefinition({{1, 0.4}, {0.4, 1}});
  const GeneralGreedMinResult r = GeneralGreedMinDetailed(*f, 2, 0.5);
  EXPECT_EQ(r.seeds, (std::vector<int>{0, 1}));
  EXPECT_EQ(r.partition.assignment(), (std::vector<int>{0, 1}));
  EXPECT_EQ(r.phase1_steps + r.phase2_steps, 0);
}

TEST(GeneralGreedMinTest, PhaseExtremes) {
  const auto f = CardinalityDefinition(10);
  const auto robust = GeneralGreedMinDetailed(*f, 3, 0.0);
  EXPECT_EQ(robust.phase1_steps, 7);
  EXPECT_EQ(robust.phase2_steps, 0);
  const auto average = GeneralGreedMinDetailed(*f, 3, 1.0);
  EXPECT_EQ(average.phase1_steps, 0);
  EXPECT_EQ(average.phase2_steps, 7);
}

// Phase 1 runs for k = m, m+1, ... while k <= (1 - lambda) n, and the loop
// ends once the n - m non-seed items are placed.
TEST(GeneralGreedMinTest, PhaseCountsFollowCounterRule) {
  for (int n : {5, 8, 10, 13}) {
    const auto f = CardinalityDefinition(n);
    for (int m = 1; m <= 4; ++m) {
      for (int q = 1; q <= 10; ++q) {
        const double lambda = q / 10.0;
        const int whole = (10 - q) * n / 10;  // floor((1 - lambda) n)
        const int expected = std::min(n - m, std::max(0, whole - m + 1));
        const auto r = GeneralGreedMinDetailed(*f, m, lambda);
        EXPECT_EQ(r.phase1_steps, expected) << n << " " << m << " " << lambda;
        EXPECT_EQ(r.phase1_steps + r.phase2_steps, n - m);
        if ((10 - q) * n % 10 != 0) {
          // Away from integer boundaries this is ceil((1 - lambda) n) - m.
          const int ceil = whole + 1;
          EXPECT_EQ(r.phase1_steps, std::min(n - m, std::max(0, ceil - m)));
        }
      }
    }
  }
}

TEST(GeneralGreedMinTest, RobustPhaseBalancesCardinality) {
  const auto f = CardinalityDefinition(7);
  const auto sizes = GeneralGreedMin(*f, 3, 0.0).BlockSizes();
  EXPECT_LE(*std::max_element(sizes.begin(), sizes.end()) -
                *std::min_element(sizes.begin(), sizes.end()),
            1);
}

TEST(GeneralGreedMinTest, SeedsStartDistinctBlocks) {
  std::mt19937 gen(121);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 10 + trial;
    const int m = 2 + trial % 5;
    const auto f = FacilityLocation(
        SimilarityMatrix::FromRows(testing::RandomSymmetric(n, gen)));
    const double lambda = (trial % 5) / 4.0;
    const auto r = GeneralGreedMinDetailed(*f, m, lambda);
    ASSERT_EQ(static_cast<int>(r.seeds.size()), m);
    EXPECT_EQ(std::set<int>(r.seeds.begin(), r.seeds.end()).size(),
              static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) EXPECT_EQ(r.partition.block_of(r.seeds[i]), i);
    for (int size : r.partition.BlockSizes()) EXPECT_GE(size, 1);
    EXPECT_EQ(r.seeds, SeedSelect(*f, m));
  }
}

TEST(GeneralGreedMinTest, WithinTrivialBound) {
  std::mt19937 gen(122);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 5 + trial % 4;
    const int m = 2 + trial % 2;
    const auto f = testing::CoverDefinition(testing::RandomCover(n, 10, 0.3, gen));
    const double opt =
        testing::ExhaustiveOptimum({f}, m, Direction::kMinMaxAvg, 0.0).value;
    EXPECT_LE(testing::MaxBlock({f}, GeneralGreedMin(*f, m, 0.0)),
              m * opt + 1e-9);
  }
}

TEST(GeneralGreedMinTest, Subsampling) {
  std::mt19937 gen(123);
  const auto f = FacilityLocation(
      SimilarityMatrix::FromRows(testing::RandomSymmetric(30, gen)));
  EXPECT_EQ(GeneralGreedMin(*f, 3, 0.5, {.subsample = 30}),
            GeneralGreedMin(*f, 3, 0.5));
  const GeneralGreedMinOptions sampled{.subsample = 4, .seed = 9};
  EXPECT_EQ(GeneralGreedMin(*f, 3, 0.5, sampled),
            GeneralGreedMin(*f, 3, 0.5, sampled));
  EXPECT_THROW(GeneralGreedMin(*f, 3, 0.5, {.subsample = 0}),
               std::invalid_argument);
}

TEST(GeneralGreedMinTest, Rejects) {
  const auto f = CardinalityDefinition(2);
  EXPECT_THROW(GeneralGreedMin(*f, 3, 0.5), std::invalid_argument);
  EXPECT_THROW(GeneralGreedMin(*f, 2, 1.5), std::invalid_argument);
}

}  // namespace
}  // namespace subpart
