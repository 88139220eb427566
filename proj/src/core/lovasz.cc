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

#include "subpart/core/lovasz.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace subpart {

LovaszEvaluation LovaszExtensionWithSubgradient(const SubmodularOracle& oracle,
                                                std::span<const double> x) {
  const int n = oracle.ground_size();
  if (static_cast<int>(x.size()) != n) {
    throw std::invalid_argument("lovasz: x has length " +
                                std::to_string(x.size()) + ", expected " +
                                std::to_string(n));
  }
  for (double v : x) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("lovasz: non-finite coordinate");
    }
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return x[a] > x[b]; });

  LovaszEvaluation result;
  result.subgradient.assign(n, 0.0);
  auto state = oracle.NewState();
  double previous = 0.0;
  for (int item : order) {
    state->Add(item);
    const double current = state->Value();
    const double gain = current - previous;
    previous = current;
    result.subgradient[item] = gain;
    result.value += x[item] * gain;
  }
  return result;
}

double LovaszExtension(const SubmodularOracle& oracle,
                       std::span<const double> x) {
  return LovaszExtensionWithSubgradient(oracle, x).value;
}

}  // namespace subpart
