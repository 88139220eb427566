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

#ifndef SUBPART_MIXED_COMB_H_
#define SUBPART_MIXED_COMB_H_

#include <functional>

#include "subpart/core/partition.h"

namespace subpart {

using PartitionRoutine = std::function<Partition(const MixedObjectiveSpec&)>;

struct CombCandidate {
  Partition partition;
  PartitionScore score;
};

enum class CombChoice { kWorstCase, kAverage };

struct CombResult {
  CombCandidate worst_case;
  CombCandidate average;
  CombChoice chosen = CombChoice::kWorstCase;

  const CombCandidate& winner() const {
    return chosen == CombChoice::kWorstCase ? worst_case : average;
  }
};

// Runs a worst-case and an average-case routine and keeps the partition with
// the better mixed score; the worst-case candidate wins ties.
//
// Defaults for CombSfaSwp: GreedMax (homogeneous) or GreedSat, and the plain
// welfare greedy GreedSwp. Requires kMaxMinAvg.
CombResult CombSfaSwp(const MixedObjectiveSpec& spec,
                      const PartitionRoutine& worst_case = {},
                      const PartitionRoutine& average = {});

// Defaults for CombSlbSmp: MMin, and GeneralGreedMin at lambda = 1
// (homogeneous) or GeneralLovaszRound at lambda = 1. Requires kMinMaxAvg.
CombResult CombSlbSmp(const MixedObjectiveSpec& spec,
                      const PartitionRoutine& worst_case = {},
                      const PartitionRoutine& average = {});

}  // namespace subpart

#endif  // SUBPART_MIXED_COMB_H_
