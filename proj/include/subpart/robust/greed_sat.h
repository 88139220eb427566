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

#ifndef SUBPART_ROBUST_GREED_SAT_H_
#define SUBPART_ROBUST_GREED_SAT_H_

#include <functional>
#include <optional>
#include <vector>

#include "subpart/core/oracle.h"
#include "subpart/core/partition.h"

namespace subpart {

struct GreedSatConfig {
  // Assumed quality of the inner welfare solver, in (0, 1].
  double alpha = 1.0;
  // Absolute binary-search gap; defaults to 1e-4 times the initial c_max.
  std::optional<double> epsilon;

  void Validate() const;
};

struct GreedSatResult {
  Partition partition;
  // Truncation level of the returned partition.
  double c = 0.0;
  // False when no probe passed the acceptance test; the partition is then
  // the inner solution at the final upper end of the search interval.
  bool accepted = false;
  int inner_calls = 0;
};

// Binary search on the truncation level c in [0, c_max]. `solve(c)` returns
// a partition for level c and `score(partition, c)` its truncated objective;
// a probe is accepted when score >= alpha * c. After the loop the midpoint
// of the final interval is probed once more and kept if it is accepted.
GreedSatResult SaturationSearch(
    double c_max, const GreedSatConfig& config,
    const std::function<Partition(double)>& solve,
    const std::function<double(const Partition&, double)>& score);

// Robust SFA by saturation: c_max = min_i f_i(V), inner solver GreedSwp,
// score (1/m) sum_i min{f_i(A_i), c}.
GreedSatResult GreedSatDetailed(const std::vector<OraclePtr>& oracles, int m,
                                const GreedSatConfig& config = {});

inline Partition GreedSat(const std::vector<OraclePtr>& oracles, int m,
                          const GreedSatConfig& config = {}) {
  return GreedSatDetailed(oracles, m, config).partition;
}

}  // namespace subpart

#endif  // SUBPART_ROBUST_GREED_SAT_H_
