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

#ifndef SUBPART_ROBUST_MAJORIZATION_H_
#define SUBPART_ROBUST_MAJORIZATION_H_

#include <optional>
#include <vector>

#include "subpart/core/oracle.h"
#include "subpart/core/partition.h"
#include "subpart/core/semigradient.h"

namespace subpart {

// One surrogate round of MMax / MMin.
struct IterationRecord {
  // True objective (min_i f_i for MMax, max_i f_i for MMin) of the
  // partition kept after this round.
  double objective = 0.0;
  // Surrogate objective of the surrogate solver's answer.
  double surrogate = 0.0;
  // Surrogate objective at the previous partition; equals the previous true
  // objective because the bounds are tight there.
  double surrogate_at_previous = 0.0;
  // max_i |surrogate_i(A_i) - f_i(A_i)| at the previous partition.
  double tightness_gap = 0.0;
  bool changed = false;
  double wall_ms = 0.0;
};

struct IterationTrace {
  double initial_objective = 0.0;
  std::vector<IterationRecord> rounds;  // at most max_rounds entries
  bool converged = false;               // a round left the partition unchanged
};

struct MajorizationOptions {
  int max_rounds = 50;
  // Starting partition; by default the modular solver's answer for the
  // singleton weights f_i({j}).
  std::optional<Partition> initial;
};

struct MajorizationResult {
  Partition partition;
  IterationTrace trace;
};

// Minorize-maximize for max_pi min_i f_i(A_i): each round replaces f_i by a
// modular lower bound tight at the current A_i and solves the modular
// problem with ModularMaxMin (current partition as incumbent). The true
// objective never decreases across rounds.
MajorizationResult MMax(const std::vector<OraclePtr>& oracles, int m,
                        const MajorizationOptions& options = {});

// Upper bound used per block in MMin. kByRole bounds the blocks attaining
// the current maximum with kGrow and all other blocks with kShrink.
enum class MMinBounds { kGrow, kShrink, kByRole };

// Majorize-minimize for min_pi max_i f_i(A_i) with modular upper bounds and
// ModularMinMax. The true objective never increases.
MajorizationResult MMin(const std::vector<OraclePtr>& oracles, int m,
                        MMinBounds bounds = MMinBounds::kByRole,
                        const MajorizationOptions& options = {});

}  // namespace subpart

#endif  // SUBPART_ROBUST_MAJORIZATION_H_
