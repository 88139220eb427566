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

#ifndef SUBPART_ROBUST_MODULAR_ASSIGNMENT_H_
#define SUBPART_ROBUST_MODULAR_ASSIGNMENT_H_

#include <vector>

#include "subpart/core/partition.h"
#include "subpart/core/semigradient.h"

namespace subpart {

// Block values offset_i + sum_{j in A_i} w_i(j) under `fns` (1 shared or m).
std::vector<double> ModularBlockValues(const std::vector<ModularFunction>& fns,
                                       const Partition& partition);

// Heuristic for max_pi min_i h_i(A_i) with modular h_i: the currently lowest
// block repeatedly takes the remaining item it values most, then
// single-item moves and two-item swaps are applied while they raise the
// minimum (or reduce the number of blocks attaining it). The same local search is run from the
// incumbent when one is given, and the incumbent is returned unless the
// best candidate has a strictly larger minimum.
Partition ModularMaxMin(const std::vector<ModularFunction>& fns, int m,
                        const Partition* incumbent = nullptr);

// Heuristic for min_pi max_i m_i(A_i) with modular m_i: longest-processing-
// time greedy (heaviest item first, to the block whose resulting value is
// smallest), then single-item moves and swaps lowering the maximum. Incumbent handling
// mirrors ModularMaxMin.
Partition ModularMinMax(const std::vector<ModularFunction>& fns, int m,
                        const Partition* incumbent = nullptr);

}  // namespace subpart

#endif  // SUBPART_ROBUST_MODULAR_ASSIGNMENT_H_
