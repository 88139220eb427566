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

#ifndef SUBPART_ROBUST_DOUBLE_GREEDY_H_
#define SUBPART_ROBUST_DOUBLE_GREEDY_H_

#include <cstdint>

#include "subpart/core/oracle.h"
#include "subpart/core/partition.h"

namespace subpart {

// Two-block SFA as unconstrained maximization of the (non-monotone)
// submodular g(A) = min{f1(A), f2(V \ A)}, solved by the randomized
// bi-directional greedy. Block 0 is A, block 1 is V \ A. In expectation
// min{f1(A), f2(V \ A)} >= OPT / 2.
Partition DoubleGreedySfa2(const SubmodularOracle& f1,
                           const SubmodularOracle& f2, std::uint64_t seed);

}  // namespace subpart

#endif  // SUBPART_ROBUST_DOUBLE_GREEDY_H_
