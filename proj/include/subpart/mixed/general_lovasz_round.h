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

#ifndef SUBPART_MIXED_GENERAL_LOVASZ_ROUND_H_
#define SUBPART_MIXED_GENERAL_LOVASZ_ROUND_H_

#include <vector>

#include "subpart/core/oracle.h"
#include "subpart/core/partition.h"
#include "subpart/robust/relaxation.h"

namespace subpart {

// Solves the mixed relaxation and theta-rounds it. The rounded mixed
// objective is at most m times relaxation.objective. lambda = 0 is
// LovaszRoundDetailed.
RoundingResult GeneralLovaszRoundDetailed(const std::vector<OraclePtr>& oracles,
                                          int m, double lambda,
                                          const RelaxationConfig& config = {});

inline Partition GeneralLovaszRound(const std::vector<OraclePtr>& oracles,
                                    int m, double lambda,
                                    const RelaxationConfig& config = {}) {
  return GeneralLovaszRoundDetailed(oracles, m, lambda, config).partition;
}

}  // namespace subpart

#endif  // SUBPART_MIXED_GENERAL_LOVASZ_ROUND_H_
