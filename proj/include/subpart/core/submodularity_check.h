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

#ifndef SUBPART_CORE_SUBMODULARITY_CHECK_H_
#define SUBPART_CORE_SUBMODULARITY_CHECK_H_

#include <cstdint>
#include <vector>

#include "subpart/core/oracle.h"

namespace subpart {

struct SubmodularityViolation {
  ItemList smaller;  // S
  ItemList larger;   // T, a superset of S
  int item = -1;     // j, outside T
  double gain_smaller = 0.0;
  double gain_larger = 0.0;
};

struct SubmodularityReport {
  int trials = 0;
  int violations = 0;
  // Largest gain(j, T) - gain(j, S) seen over all trials; 0 for modular
  // functions, negative or 0 for strictly submodular ones.
  double max_gain_increase = 0.0;
  std::vector<SubmodularityViolation> examples;  // first few violations
};

// Samples random triples S ⊆ T, j ∉ T and reports every one with
// gain(j, S) < gain(j, T) - tolerance.
SubmodularityReport CheckSubmodularity(const SubmodularOracle& oracle,
                                       int trials, std::uint64_t seed,
                                       double tolerance = 1e-9);

}  // namespace subpart

#endif  // SUBPART_CORE_SUBMODULARITY_CHECK_H_
