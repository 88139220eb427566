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

#ifndef SUBPART_MIXED_GENERAL_GREED_MIN_H_
#define SUBPART_MIXED_GENERAL_GREED_MIN_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "subpart/core/oracle.h"
#include "subpart/core/partition.h"

namespace subpart {

// m items picked by lazy greedy maximization of f under |S| = m, in
// selection order (lowest id on ties).
std::vector<int> SeedSelect(const SubmodularOracle& f, int m);

struct GeneralGreedMinOptions {
  // When set, each step only considers a uniformly random subset of this
  // many remaining items.
  std::optional<int> subsample;
  std::uint64_t seed = 0;
};

struct GeneralGreedMinResult {
  Partition partition;
  // seeds[i] started block i.
  std::vector<int> seeds;
  int phase1_steps = 0;
  int phase2_steps = 0;
};

// Homogeneous min-max/average heuristic. Blocks start from SeedSelect. With
// k counting assigned items (seeds included), while k <= (1-lambda) n the
// lowest-valued block takes the remaining item of smallest gain; afterwards
// each step commits the (item, block) pair of smallest gain overall (lowest
// block, then lowest item on ties).
GeneralGreedMinResult GeneralGreedMinDetailed(
    const SubmodularOracle& f, int m, double lambda,
    const GeneralGreedMinOptions& options = {});

inline Partition GeneralGreedMin(const SubmodularOracle& f, int m,
                                 double lambda,
                                 const GeneralGreedMinOptions& options = {}) {
  return GeneralGreedMinDetailed(f, m, lambda, options).partition;
}

}  // namespace subpart

#endif  // SUBPART_MIXED_GENERAL_GREED_MIN_H_
