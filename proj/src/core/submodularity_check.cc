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

#include "subpart/core/submodularity_check.h"

#include <limits>
#include <numeric>
#include <stdexcept>

#include "subpart/core/rng.h"

namespace subpart {

namespace {
constexpr std::size_t kMaxExamples = 8;
}  // namespace

SubmodularityReport CheckSubmodularity(const SubmodularOracle& oracle,
                                       int trials, std::uint64_t seed,
                                       double tolerance) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const int n = oracle.ground_size();
  SubmodularityReport report;
  report.trials = trials;
  report.max_gain_increase = -std::numeric_limits<double>::infinity();
  if (n < 2) {
    report.max_gain_increase = 0.0;
    return report;
  }

  Rng rng(seed);
  std::vector<int> order(n);
  for (int t = 0; t < trials; ++t) {
    std::iota(order.begin(), order.end(), 0);
    rng.Shuffle(std::span<int>(order));
    // order[0] is j; T is a random-size prefix of the rest, S a prefix of T.
    const int item = order[0];
    const int larger_size = static_cast<int>(rng.UniformInt(n));  // 0..n-1
    const int smaller_size =
        static_cast<int>(rng.UniformInt(larger_size + 1));
    ItemList larger(order.begin() + 1, order.begin() + 1 + larger_size);
    ItemList smaller(larger.begin(), larger.begin() + smaller_size);

    const double gain_smaller = StateOf(oracle, smaller)->Gain(item);
    const double gain_larger = StateOf(oracle, larger)->Gain(item);
    const double increase = gain_larger - gain_smaller;
    if (increase > report.max_gain_increase) {
      report.max_gain_increase = increase;
    }
    if (gain_smaller < gain_larger - tolerance) {
      ++report.violations;
      if (report.examples.size() < kMaxExamples) {
        report.examples.push_back(
            {smaller, larger, item, gain_smaller, gain_larger});
      }
    }
  }
  return report;
}

}  // namespace subpart
