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

#include "subpart/mixed/general_lovasz_round.h"

namespace subpart {

RoundingResult GeneralLovaszRoundDetailed(const std::vector<OraclePtr>& oracles,
                                          int m, double lambda,
                                          const RelaxationConfig& config) {
  RoundingResult result;
  result.relaxation = SolveMixedRelaxation(oracles, m, lambda, config);
  result.partition = ThetaRound(result.relaxation.x);
  return result;
}

}  // namespace subpart
