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

#ifndef SUBPART_CORE_LOVASZ_H_
#define SUBPART_CORE_LOVASZ_H_

#include <span>
#include <vector>

#include "subpart/core/oracle.h"

namespace subpart {

// Lovász extension value together with the greedy subgradient that
// realizes it: value == sum_j subgradient[j] * x[j].
struct LovaszEvaluation {
  double value = 0.0;
  std::vector<double> subgradient;
};

// Chain-weighted sum over x sorted non-increasingly; equal coordinates are
// ordered by item id. Throws std::invalid_argument on a wrong-length or
// non-finite x.
double LovaszExtension(const SubmodularOracle& oracle,
                       std::span<const double> x);

LovaszEvaluation LovaszExtensionWithSubgradient(const SubmodularOracle& oracle,
                                                std::span<const double> x);

}  // namespace subpart

#endif  // SUBPART_CORE_LOVASZ_H_
