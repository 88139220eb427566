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

#include "subpart/mixed/comb.h"

#include <algorithm>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "subpart/functions/functions.h"
#include "test_util.h"

namespace subpart {
namespace {

using testing::CardinalityDefinition;
using testing::ExhaustiveOptimum;
using testing::ModularDefinition;

PartitionRoutine Exact(Direction direction, double lambda) {
  return [=](const MixedObjectiveSpec& s) {
    return ExhaustiveOptimum(s.oracles(), s.num_blocks(), direction, lambda)
        .partition;
  };
}

TEST(CombSfaSwpTest, Cardinality) {
  const auto spec = MixedObjectiveSpec::Homogeneous(
      Direction::kMaxMinAvg, 1.0, CardinalityDefinition(4), 2);
  const CombResult r = CombSfaSwp(spec);
  EXPECT_EQ(r.worst_case.score.mixed, 2.0);
  EXPECT_EQ(r.average.score.mixed, 2.0);
  EXPECT_EQ(r.winner().score.mixed, 2.0);
  // The welfare greedy breaks ties towards block 0, so below lambda = 1 the
  // balanced worst-case candidate wins.
  const CombResult half = CombSfaSwp(spec.WithLambda(0.5));
  EXPECT_EQ(half.chosen, CombChoice::kWorstCase);
  EXPECT_EQ(half.winner().score.mixed, 2.0);
}

TEST(CombSfaSwpTest, IdenticalCandidatesTie) {
  const auto spec = MixedObjectiveSpec::Homogeneous(
      Direction::kMaxMinAvg, 0.3, ModularDefinition({1, 2, 3}), 2);
  const PartitionRoutine same = [](const MixedObjectiveSpec&) {
    return Partition({0, 1, 0}, 2);
  };
  const CombResult r = CombSfaSwp(spec, same, same);
  EXPECT_EQ(r.worst_case.score.mixed, r.average.score.mixed);
  EXPECT_EQ(r.chosen, CombChoice::kWorstCase);
}

TEST(CombSfaSwpTest, LambdaZeroPrefersHigherMinimum) {
  const auto spec = MixedObjectiveSpec::Homogeneous(
      Direction::kMaxMinAvg, 0.0, ModularDefinition({1, 2, 3}), 2);
  const CombResult r = CombSfaSwp(
      spec, [](const MixedObjectiveSpec&) { return Partition({0, 0, 0}, 2); },
      [](const MixedObjectiveSpec&) { return Partition({0, 0, 1}, 2); });
  EXPECT_EQ(r.chosen, CombChoice::kAverage);
  EXPECT_EQ(r.winner().score.worst, 3.0);
}

TEST(CombSlbSmpTest, ModularMakespan) {
  const auto spec = MixedObjectiveSpec::Homogeneous(
      Direction::kMinMaxAvg, 0.0, ModularDefinition({3, 2, 2}), 2);
  const CombResult r = CombSlbSmp(spec);
  const CombCandidate& other =
      r.chosen == CombChoice::kWorstCase ? r.average : r.worst_case;
  EXPECT_LE(r.winner().score.worst, other.score.worst);
  EXPECT_EQ(r.winner().score.worst, 4.0);
  EXPECT_EQ(ExhaustiveOptimum(spec.oracles(), 2, Direction::kMinMaxAvg, 0.0)
                .value,
            4.0);
}

TEST(CombSlbSmpTest, AverageOnlyUsesAverage) {
  const auto spec = MixedObjectiveSpec::Homogeneous(
      Direction::kMinMaxAvg, 1.0, CardinalityDefinition(4), 2);
  const CombResult r = CombSlbSmp(
      spec, [](const MixedObjectiveSpec&) { return Partition({0, 0, 1, 1}, 2); },
      [](const MixedObjectiveSpec&) { return Partition({0, 0, 0, 0}, 2); });
  EXPECT_EQ(r.worst_case.score.mixed, 2.0);
  EXPECT_EQ(r.average.score.mixed, 2.0);
  EXPECT_EQ(r.chosen, CombChoice::kWorstCase);
}

TEST(CombTest, RejectsWrongDirection) {
  const auto max_spec = MixedObjectiveSpec::Homogeneous(
      Direction::kMaxMinAvg, 0.5, CardinalityDefinition(3), 2);
  const auto min_spec = max_spec.WithLambda(0.5);
  EXPECT_THROW(CombSlbSmp(max_spec), std::invalid_argument);
  EXPECT_THROW(
      CombSfaSwp(MixedObjectiveSpec::Homogeneous(
          Direction::kMinMaxAvg, 0.5, CardinalityDefinition(3), 2)),
      std::invalid_argument);
  EXPECT_NO_THROW(CombSfaSwp(min_spec));
}

TEST(CombTest, ChosenIsBestCandidateAndMeetsFactor) {
  std::mt19937 gen(131);
  for (int trial = 0; trial < 16; ++trial) {
    const int n = 5 + trial % 3;
    const int m = 2 + trial % 2;
    std::vector<OraclePtr> fs;
    for (int i = 0; i < m; ++i) {
      fs.push_back(FacilityLocation(
          SimilarityMatrix::FromRows(testing::RandomSymmetric(n, gen))));
    }
    const double lambda = (trial % 4) / 3.0;
    const double lbar = 1.0 - lambda;

    const MixedObjectiveSpec max_spec(Direction::kMaxMinAvg, lambda, fs, m);
    const CombResult up =
        CombSfaSwp(max_spec, Exact(Direction::kMaxMinAvg, 0.0),
                   Exact(Direction::kMaxMinAvg, 1.0));
    EXPECT_EQ(up.winner().score.mixed,
              std::max(up.worst_case.score.mixed, up.average.score.mixed));
    const double opt_up =
        ExhaustiveOptimum(fs, m, Direction::kMaxMinAvg, lambda).value;
    // Exact sub-solvers: alpha = beta = 1.
    EXPECT_GE(up.winner().score.mixed,
              std::max(1.0 / (lbar + 1.0), lambda) * opt_up - 1e-9);

    const MixedObjectiveSpec min_spec(Direction::kMinMaxAvg, lambda, fs, m);
    const CombResult down =
        CombSlbSmp(min_spec, Exact(Direction::kMinMaxAvg, 0.0),
                   Exact(Direction::kMinMaxAvg, 1.0));
    EXPECT_EQ(down.winner().score.mixed,
              std::min(down.worst_case.score.mixed, down.average.score.mixed));
    const double opt_down =
        ExhaustiveOptimum(fs, m, Direction::kMinMaxAvg, lambda).value;
    EXPECT_LE(down.winner().score.mixed,
              std::min(m / (m * lbar + lambda), m * lbar + lambda) * opt_down +
                  1e-9);
  }
}

}  // namespace
}  // namespace subpart
