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

#ifndef SUBPART_ROBUST_GREEDY_H_
#define SUBPART_ROBUST_GREEDY_H_

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "subpart/core/oracle.h"
#include "subpart/core/partition.h"

namespace subpart {

// Per-block oracle list: either one shared oracle or one per block.
inline const SubmodularOracle& BlockOracle(const std::vector<OraclePtr>& oracles,
                                           int block) {
  return *oracles[oracles.size() == 1 ? 0 : block];
}

// Throws unless `oracles` holds 1 or m non-null oracles on one ground set.
int CheckBlockOracles(const std::vector<OraclePtr>& oracles, int m);

struct GreedyOptions {
  // Priority-queue (lazy) marginal gain evaluation. Disabling it gives the
  // plain scan, which selects exactly the same items.
  bool lazy = true;
};

// Homogeneous SFA greedy: repeatedly give the lowest-valued block (lowest
// index on ties) the remaining item of largest marginal gain (lowest id on
// ties). min_i f(A_i) >= OPT / m.
Partition GreedMax(const SubmodularOracle& f, int m, GreedyOptions options = {});

// Streaming variant: items arrive in `order` and each joins the currently
// lowest-valued block. Same 1/m guarantee. `order` must be a permutation.
Partition StreamGreed(const SubmodularOracle& f, int m,
                      std::span<const int> order);

// Greedy for the truncated welfare sum_i min{f_i(A_i), c}: each step commits
// the (block, item) pair with the largest truncated gain; ties go to the
// lowest block, then the lowest item. c = +inf is the plain welfare greedy.
Partition GreedSwp(const std::vector<OraclePtr>& oracles, int m,
                   double c = std::numeric_limits<double>::infinity(),
                   GreedyOptions options = {});

// (1/m) sum_i min{f_i(A_i), c}.
double TruncatedWelfare(const std::vector<OraclePtr>& oracles,
                        const Partition& partition, double c);

struct GreedMinOptions {
  // When set, each step scans a uniformly random subset of this many
  // remaining items instead of all of them.
  std::optional<int> subsample;
  std::uint64_t seed = 0;
};

inline constexpr int kDefaultGreedMinSubsample = 64;

// Homogeneous SLB heuristic: the lowest-valued block receives the remaining
// item of smallest marginal gain.
Partition GreedMin(const SubmodularOracle& f, int m,
                   GreedMinOptions options = {});

// Uniformly random partition whose block sizes are floor(n/m) or ceil(n/m).
Partition BalancedRandomPartition(int n, int m, std::uint64_t seed);

}  // namespace subpart

#endif  // SUBPART_ROBUST_GREEDY_H_
