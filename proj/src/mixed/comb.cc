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

#include "subpart/mixed/comb.h"

#include <stdexcept>

#include "subpart/mixed/general_greed_min.h"
#include "subpart/mixed/general_lovasz_round.h"
#include "subpart/robust/greed_sat.h"
#include "subpart/robust/greedy.h"
#include "subpart/robust/majorization.h"

namespace subpart {
namespace {

CombCandidate Run(const MixedObjectiveSpec& spec,
                  const PartitionRoutine& routine) {
  CombCandidate candidate;
  candidate.partition = routine(spec);
  candidate.score = EvaluatePartition(spec, candidate.partition);
  return candidate;
}

CombResult Combine(const MixedObjectiveSpec& spec,
                   const PartitionRoutine& worst_case,
                   const PartitionRoutine& average) {
  CombResult result;
  result.worst_case = Run(spec, worst_case);
  result.average = Run(spec, average);
  result.chosen = Better(spec.direction(), result.average.score.mixed,
                         result.worst_case.score.mixed)
                      ? CombChoice::kAverage
                      : CombChoice::kWorstCase;
  return result;
}

}  // namespace

CombResult CombSfaSwp(const MixedObjectiveSpec& spec,
                      const PartitionRoutine& worst_case,
                      const PartitionRoutine& average) {
  if (spec.direction() != Direction::kMaxMinAvg) {
    throw std::invalid_argument("CombSfaSwp needs the max-min-avg objective");
  }
  const PartitionRoutine default_worst = [](const MixedObjectiveSpec& s) {
    if (s.homogeneous()) return GreedMax(s.oracle(0), s.num_blocks());
    return GreedSat(s.oracles(), s.num_blocks());
  };
  const PartitionRoutine default_average = [](const MixedObjectiveSpec& s) {
    return GreedSwp(s.oracles(), s.num_blocks());
  };
  return Combine(spec, worst_case ? worst_case : default_worst,
                 average ? average : default_average);
}

CombResult CombSlbSmp(const MixedObjectiveSpec& spec,
                      const PartitionRoutine& worst_case,
                      const PartitionRoutine& average) {
  if (spec.direction() != Direction::kMinMaxAvg) {
    throw std::invalid_argument("CombSlbSmp needs the min-max-avg objective");
  }
  const PartitionRoutine default_worst = [](const MixedObjectiveSpec& s) {
    return MMin(s.oracles(), s.num_blocks()).partition;
  };
  const PartitionRoutine default_average = [](const MixedObjectiveSpec& s) {
    if (s.homogeneous()) return GeneralGreedMin(s.oracle(0), s.num_blocks(), 1.0);
    return GeneralLovaszRound(s.oracles(), s.num_blocks(), 1.0);
  };
  return Combine(spec, worst_case ? worst_case : default_worst,
                 average ? average : default_average);
}

}  // namespace subpart
