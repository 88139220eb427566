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

#include "subpart/robust/majorization.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "subpart/robust/greedy.h"
#include "subpart/robust/modular_assignment.h"

namespace subpart {
namespace {

enum class Sense { kMaximizeMin, kMinimizeMax };

std::vector<double> TrueValues(const std::vector<OraclePtr>& oracles,
                               const Partition& partition) {
  const auto blocks = partition.Blocks();
  std::vector<double> values(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    values[i] = BlockOracle(oracles, static_cast<int>(i)).Evaluate(blocks[i]);
  }
  return values;
}

double Extreme(const std::vector<double>& values, Sense sense) {
  return sense == Sense::kMaximizeMin
             ? *std::min_element(values.begin(), values.end())
             : *std::max_element(values.begin(), values.end());
}

bool Worse(double a, double b, Sense sense) {
  return sense == Sense::kMaximizeMin ? a < b : a > b;
}

// Builds the bound for one block; `extreme` marks blocks attaining the
// current objective.
using BoundBuilder = std::function<ModularFunction(
    const SubmodularOracle&, const ItemList&, bool extreme)>;
using SurrogateSolver = std::function<Partition(
    const std::vector<ModularFunction>&, int, const Partition*)>;

MajorizationResult Iterate(const std::vector<OraclePtr>& oracles, int m,
                           const MajorizationOptions& options, Sense sense,
                           const BoundBuilder& bound,
                           const SurrogateSolver& solve) {
  const int n = CheckBlockOracles(oracles, m);
  if (options.max_rounds < 1) {
    throw std::invalid_argument("max_rounds must be >= 1");
  }
  MajorizationResult result;
  if (options.initial) {
    if (options.initial->ground_size() != n ||
        options.initial->num_blocks() != m) {
      throw std::invalid_argument("initial partition does not match");
    }
    result.partition = *options.initial;
  } else {
    std::vector<ModularFunction> singles;
    for (std::size_t i = 0; i < oracles.size(); ++i) {
      singles.push_back(SingletonWeights(*oracles[i]));
    }
    result.partition = solve(singles, m, nullptr);
  }
  std::vector<double> values = TrueValues(oracles, result.partition);
  double objective = Extreme(values, sense);
  result.trace.initial_objective = objective;

  for (int round = 0; round < options.max_rounds; ++round) {
    const auto start = std::chrono::steady_clock::now();
    const auto blocks = result.partition.Blocks();
    std::vector<ModularFunction> bounds;
    IterationRecord record;
    for (int i = 0; i < m; ++i) {
      bounds.push_back(
          bound(BlockOracle(oracles, i), blocks[i], values[i] == objective));
      record.tightness_gap =
          std::max(record.tightness_gap,
                   std::abs(bounds.back().Evaluate(blocks[i]) - values[i]));
    }
    record.surrogate_at_previous =
        Extreme(ModularBlockValues(bounds, result.partition), sense);
    Partition candidate = solve(bounds, m, &result.partition);
    record.surrogate = Extreme(ModularBlockValues(bounds, candidate), sense);

    bool stop = candidate == result.partition;
    if (!stop) {
      std::vector<double> candidate_values = TrueValues(oracles, candidate);
      const double candidate_objective = Extreme(candidate_values, sense);
      if (Worse(candidate_objective, objective, sense)) {
        stop = true;
      } else {
        result.partition = std::move(candidate);
        values = std::move(candidate_values);
        objective = candidate_objective;
        record.changed = true;
      }
    }
    record.objective = objective;
    record.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    result.trace.rounds.push_back(record);
    if (stop) {
      result.trace.converged = true;
      break;
    }
  }
  return result;
}

}  // namespace

MajorizationResult MMax(const std::vector<OraclePtr>& oracles, int m,
                        const MajorizationOptions& options) {
  return Iterate(
      oracles, m, options, Sense::kMaximizeMin,
      [](const SubmodularOracle& f, const ItemList& anchor, bool) {
        return ModularLowerBound(f, anchor, GreedyAnchorOrder(f, anchor));
      },
      [](const std::vector<ModularFunction>& fns, int blocks,
         const Partition* incumbent) {
        return ModularMaxMin(fns, blocks, incumbent);
      });
}

MajorizationResult MMin(const std::vector<OraclePtr>& oracles, int m,
                        MMinBounds bounds,
                        const MajorizationOptions& options) {
  return Iterate(
      oracles, m, options, Sense::kMinimizeMax,
      [bounds](const SubmodularOracle& f, const ItemList& anchor,
               bool extreme) {
        const bool grow = bounds == MMinBounds::kGrow ||
                          (bounds == MMinBounds::kByRole && extreme);
        return ModularUpperBound(f, anchor,
                                 grow ? UpperBoundVariant::kGrow
                                      : UpperBoundVariant::kShrink);
      },
      [](const std::vector<ModularFunction>& fns, int blocks,
         const Partition* incumbent) {
        return ModularMinMax(fns, blocks, incumbent);
      });
}

}  // namespace subpart
