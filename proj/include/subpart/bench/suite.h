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

#ifndef SUBPART_BENCH_SUITE_H_
#define SUBPART_BENCH_SUITE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "subpart/bench/report.h"
#include "subpart/bench/synthetic.h"

namespace subpart {

enum class Suite {
  kSfaLambda0,  // greed_max, greed_sat, mmax
  kSlbLambda0,  // greed_min, mmin, lovasz_round
  kMixedMax,    // general_greed_sat
  kMixedMin,    // general_greed_min, general_lovasz_round
};

// Accepts "sfa0", "slb0", "mixed-max" and "mixed-min".
Suite ParseSuite(const std::string& name);
std::string SuiteName(Suite suite);

inline constexpr char kBaselineName[] = "balanced_random_best";

struct SuiteConfig {
  Suite suite = Suite::kSfaLambda0;
  // Instance family; `instance.seed` is replaced by each master seed.
  SyntheticConfig instance;
  std::vector<int> m_grid = {2, 6, 10, 14};
  // Used by the mixed suites; the lambda = 0 suites ignore it.
  std::vector<double> lambda_grid = {0.25, 0.5, 0.75};
  int replicates = 100;
  std::vector<std::uint64_t> seeds = {0};
};

std::vector<std::string> SuiteAlgorithms(Suite suite);

// Rows are ordered by seed, then m, then lambda, then the suite's algorithms
// followed by the baseline. One homogeneous instance is generated per seed.
// The baseline is the best over `replicates` balanced random partitions
// whose seeds are DeriveSeed(seed, r).
BenchReport RunSuite(const SuiteConfig& config);

}  // namespace subpart

#endif  // SUBPART_BENCH_SUITE_H_
