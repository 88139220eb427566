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

#include "subpart/robust/greed_sat.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "subpart/robust/greedy.h"

namespace subpart {
namespace {

// Relative slack on the acceptance test: an average of m saturated values
// min{f_i, c} = c can round to just below c.
constexpr double kAcceptSlack = 1e-12;

}  // namespace

void GreedSatConfig::Validate() const {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha must lie in (0, 1]");
  }
  if (epsilon && !(*epsilon > 0.0 && std::isfinite(*epsilon))) {
    throw std::invalid_argument("epsilon must be positive");
  }
}

GreedSatResult SaturationSearch(
    double c_max, const GreedSatConfig& config,
    const std::function<Partition(double)>& solve,
    const std::function<double(const Partition&, double)>& score) {
  config.Validate();
  GreedSatResult result;
  const double epsilon = config.epsilon.value_or(1e-4 * c_max);
  double lo = 0.0;
  double hi = c_max;

  auto probe = [&](double c, Partition& out) {
    out = solve(c);
    ++result.inner_calls;
    return score(out, c) >= config.alpha * c * (1.0 - kAcceptSlack);
  };

  Partition candidate;
  if (c_max > 0.0 && epsilon > 0.0) {
    while (hi - lo >= epsilon) {
      const double c = (lo + hi) / 2.0;
      if (probe(c, candidate)) {
        lo = c;
        result.partition = candidate;
        result.c = c;
        result.accepted = true;
      } else {
        hi = c;
      }
    }
  }

  if (result.accepted) {
    const double c = (lo + hi) / 2.0;
    if (probe(c, candidate)) {
      result.partition = std::move(candidate);
      result.c = c;
    }
    return result;
  }
  result.accepted = probe(hi, candidate);
  result.partition = std::move(candidate);
  result.c = hi;
  return result;
}

GreedSatResult GreedSatDetailed(const std::vector<OraclePtr>& oracles, int m,
                                const GreedSatConfig& config) {
  const int n = CheckBlockOracles(oracles, m);
  config.Validate();
  std::vector<int> all(n);
  for (int v = 0; v < n; ++v) all[v] = v;
  double c_max = std::numeric_limits<double>::infinity();
  for (int i = 0; i < m; ++i) {
    c_max = std::min(c_max, BlockOracle(oracles, i).Evaluate(all));
  }
  return SaturationSearch(
      c_max, config, [&](double c) { return GreedSwp(oracles, m, c); },
      [&](const Partition& p, double c) {
        return TruncatedWelfare(oracles, p, c);
      });
}

}  // namespace subpart
