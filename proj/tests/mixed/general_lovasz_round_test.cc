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

#include "subpart/mixed/general_lovasz_round.h"

#include <random>

#include <gtest/gtest.h>

#include "subpart/functions/functions.h"
#include "test_util.h"

namespace subpart {
namespace {

using testing::MixedValue;
using testing::ModularDefinition;

TEST(GeneralLovaszRoundTest, LambdaZeroIsLovaszRound) {
  std::mt19937 gen(111);
  for (int trial = 0; trial < 5; ++trial) {
    const int m = 2 + trial % 2;
    std::vector<OraclePtr> fs;
    for (int i = 0; i < m; ++i) {
      fs.push_back(FacilityLocation(
          SimilarityMatrix::FromRows(testing::RandomSymmetric(8, gen))));
    }
    const RelaxationConfig config{.max_iters = 300};
    const RoundingResult a = GeneralLovaszRoundDetailed(fs, m, 0.0, config);
    const RoundingResult b = LovaszRoundDetailed(fs, m, config);
    EXPECT_EQ(a.partition, b.partition);
    EXPECT_EQ(a.relaxation.x, b.relaxation.x);
    EXPECT_EQ(a.relaxation.objective, b.relaxation.objective);
  }
}

TEST(GeneralLovaszRoundTest, SingleBlock) {
  const auto f = ModularDefinition({1, 2, 3});
  for (double lambda : {0.0, 0.4, 1.0}) {
    const RoundingResult r = GeneralLovaszRoundDetailed({f}, 1, lambda);
    EXPECT_EQ(r.partition.assignment(), (std::vector<int>{0, 0, 0}));
    EXPECT_DOUBLE_EQ(r.relaxation.objective, 6.0);
  }
}

TEST(GeneralLovaszRoundTest, AverageOnlyModularClosedForm) {
  // With lambda = 1 the relaxed objective is (1/2) sum_i w.x_i, minimized at
  // w(V)/2 by any point whose columns sum to exactly 1.
  const auto f = ModularDefinition({1, 2, 3, 4});
  const RoundingResult r = GeneralLovaszRoundDetailed({f}, 2, 1.0);
  EXPECT_NEAR(r.relaxation.objective, 5.0, 1e-9);
  EXPECT_LE(MixedValue({f}, r.partition, Direction::kMinMaxAvg, 1.0),
            2.0 * r.relaxation.objective + 1e-9);
}

TEST(GeneralLovaszRoundTest, RoundingCeiling) {
  std::mt19937 gen(112);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 6 + trial % 5;
    const int m = 2 + trial % 2;
    std::vector<OraclePtr> fs;
    for (int i = 0; i < m; ++i) {
      fs.push_back(FacilityLocation(
          SimilarityMatrix::FromRows(testing::RandomSymmetric(n, gen))));
    }
    for (double lambda : {0.5, 1.0}) {
      const RoundingResult r =
          GeneralLovaszRoundDetailed(fs, m, lambda, {.max_iters = 300});
      EXPECT_LE(CoverageViolation(r.relaxation.x), 1e-9);
      EXPECT_LE(MixedValue(fs, r.partition, Direction::kMinMaxAvg, lambda),
                m * r.relaxation.objective + 1e-9);
    }
  }
}

}  // namespace
}  // namespace subpart
