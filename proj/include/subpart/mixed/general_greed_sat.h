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

#ifndef SUBPART_MIXED_GENERAL_GREED_SAT_H_
#define SUBPART_MIXED_GENERAL_GREED_SAT_H_

#include <limits>
#include <vector>

#include "subpart/core/oracle.h"
#include "subpart/core/partition.h"
#include "subpart/robust/greed_sat.h"

namespace subpart {

// F_i = (1-lambda) f_i(A_i) + lambda * (1/m) sum_j f_j(A_j), one per block.
std::vector<double> MixedBlockValues(const std::vector<OraclePtr>& oracles,
                                     const Partition& partition, double lambda);

// (1/m) sum_i min{F_i, c}.
double TruncatedMixedWelfare(const std::vector<OraclePtr>& oracles,
                             const Partition& partition, double lambda,
                             double c);

// Greedy for TruncatedMixedWelfare at level c: each step commits the
// (block, item) pair with the largest gain, lowest block then lowest item on
// ties. Evaluation is lazy; with lambda = 0 this is GreedSwp.
Partition MixedSwpGreedy(const std::vector<OraclePtr>& oracles, int m,
                         double lambda,
                         double c = std::numeric_limits<double>::infinity());

// Saturation search on TruncatedMixedWelfare with c_max = sum_i f_i(V).
// lambda = 0 runs GreedSatDetailed unchanged.
GreedSatResult GeneralGreedSatDetailed(const std::vector<OraclePtr>& oracles,
                                       int m, double lambda,
                                       const GreedSatConfig& config = {});

inline Partition GeneralGreedSat(const std::vector<OraclePtr>& oracles, int m,
                                 double lambda,
                                 const GreedSatConfig& config = {}) {
  return GeneralGreedSatDetailed(oracles, m, lambda, config).partition;
}

}  // namespace subpart

#endif  // SUBPART_MIXED_GENERAL_GREED_SAT_H_
