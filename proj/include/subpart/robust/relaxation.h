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

#ifndef SUBPART_ROBUST_RELAXATION_H_
#define SUBPART_ROBUST_RELAXATION_H_

#include <span>
#include <vector>

#include "subpart/core/oracle.h"
#include "subpart/core/partition.h"

namespace subpart {

enum class StepRule {
  kDiminishingOverSqrtT,  // step_scale / sqrt(t)
  kConstant,              // step_scale
};

struct RelaxationConfig {
  int max_iters = 2000;
  StepRule step_rule = StepRule::kDiminishingOverSqrtT;
  // Length of a step in x-space, measured along the normalized subgradient.
  double step_scale = 0.5;
  // Relative improvement of the best objective that resets the stall
  // counter; a stall of max(50, max_iters / 10) iterations ends a start.
  double tolerance = 1e-6;
  // Additional starts from the best point found so far, with the step
  // schedule reset.
  int restarts = 2;

  void Validate() const;
};

// Fractional assignment: x[i][j] is the mass of item j in block i.
using FractionalAssignment = std::vector<std::vector<double>>;

struct RelaxationResult {
  FractionalAssignment x;
  // Objective at x: (1-lambda) max_i L_i(x_i) + (lambda/m) sum_i L_i(x_i),
  // where L_i is the Lovász extension of f_i.
  double objective = 0.0;
  bool converged = false;
  int iterations = 0;
};

// Euclidean projection of y onto {z in [0,1]^m : sum z >= 1}.
std::vector<double> ProjectCoverage(std::span<const double> y);

// Relaxed objective and the fractional-coverage feasibility violation
// max(max_j (1 - sum_i x_i(j)), max over entries of distance to [0,1]).
double MixedRelaxedObjective(const std::vector<OraclePtr>& oracles,
                             const FractionalAssignment& x, double lambda);
double CoverageViolation(const FractionalAssignment& x);

// Projected subgradient descent on the mixed relaxation over
// {x in [0,1]^{m x n} : sum_i x_i(j) >= 1}, starting from x = 1/m and
// returning the best iterate seen.
RelaxationResult SolveMixedRelaxation(const std::vector<OraclePtr>& oracles,
                                      int m, double lambda,
                                      const RelaxationConfig& config = {});

// lambda = 0: minimize max_i L_i(x_i).
inline RelaxationResult SolveSlbRelaxation(
    const std::vector<OraclePtr>& oracles, int m,
    const RelaxationConfig& config = {}) {
  return SolveMixedRelaxation(oracles, m, 0.0, config);
}

// Sends every item to the block holding most of its mass (lowest block on
// ties).
Partition ThetaRound(const FractionalAssignment& x);

struct RoundingResult {
  Partition partition;
  RelaxationResult relaxation;
};

// Relax-and-round for min_pi max_i f_i(A_i); the rounded value is at most
// m times relaxation.objective.
RoundingResult LovaszRoundDetailed(const std::vector<OraclePtr>& oracles,
                                   int m, const RelaxationConfig& config = {});

inline Partition LovaszRound(const std::vector<OraclePtr>& oracles, int m,
                             const RelaxationConfig& config = {}) {
  return LovaszRoundDetailed(oracles, m, config).partition;
}

}  // namespace subpart

#endif  // SUBPART_ROBUST_RELAXATION_H_
