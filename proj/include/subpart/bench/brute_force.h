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

#ifndef SUBPART_BENCH_BRUTE_FORCE_H_
#define SUBPART_BENCH_BRUTE_FORCE_H_

#include <cstdint>
#include <stdexcept>

#include "subpart/core/partition.h"

namespace subpart {

inline constexpr std::uint64_t kDefaultBruteForceLimit = 2'000'000;

// Thrown when m^n exceeds the enumeration limit.
class BruteForceRefused : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct BruteForceResult {
  Partition partition;
  double value = 0.0;
};

// Exact optimum of the mixed objective over all m^n ordered assignments.
// Ties go to the lexicographically smallest assignment vector. Block values
// come from Evaluate(), so `value` matches EvaluatePartition exactly.
BruteForceResult BruteForceOpt(const MixedObjectiveSpec& spec,
                               std::uint64_t limit = kDefaultBruteForceLimit);

}  // namespace subpart

#endif  // SUBPART_BENCH_BRUTE_FORCE_H_
