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

#include "subpart/robust/relaxation.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "subpart/core/lovasz.h"
#include "subpart/robust/greedy.h"

namespace subpart {
namespace {

double Clip(double v) { return std::clamp(v, 0.0, 1.0); }

struct Evaluation {
  double objective = 0.0;
  FractionalAssignment direction;  // subgradient of the objective
};

Evaluation Evaluate(const std::vector<OraclePtr>& oracles,
                    const FractionalAssignment& x, double lambda) {
  const int m = static_cast<int>(x.size());
  std::vector<LovaszEvaluation> parts;
  parts.reserve(m);
  for (int i = 0; i < m; ++i) {
    parts.push_back(LovaszExtensionWithSubgradient(BlockOracle(oracles, i), x[i]));
  }
  int worst = 0;
  double sum = 0.0;
  for (int i = 0; i < m; ++i) {
    if (parts[i].value > parts[worst].value) worst = i;
    sum += parts[i].value;
  }
  Evaluation eval;
  eval.objective = (1.0 - lambda) * parts[worst].value + lambda / m * sum;
  eval.direction.resize(m);
  for (int i = 0; i < m; ++i) {
    const double weight = lambda / m + (i == worst ? 1.0 - lambda : 0.0);
    auto& g = eval.direction[i];
    g = std::move(parts[i].subgradient);
    for (double& v : g) v *= weight;
  }
  return eval;
}

}  // namespace

void RelaxationConfig::Validate() const {
  if (max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
  if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be > 0");
  if (!(step_scale > 0.0) || !std::isfinite(step_scale)) {
    throw std::invalid_argument("step scale must be positive");
  }
  if (restarts < 0) throw std::invalid_argument("restarts must be >= 0");
}

std::vector<double> ProjectCoverage(std::span<const double> y) {
  const int m = static_cast<int>(y.size());
  std::vector<double> z(m);
  double sum = 0.0;
  for (int i = 0; i < m; ++i) sum += z[i] = Clip(y[i]);
  if (sum >= 1.0 || m == 0) return z;

  // s(tau) = sum_i clip(y_i + tau) is nondecreasing and piecewise linear;
  // find the tau > 0 with s(tau) = 1.
  auto s = [&](double tau) {
    double total = 0.0;
    for (int i = 0; i < m; ++i) total += Clip(y[i] + tau);
    return total;
  };
  std::vector<double> breaks;
  for (int i = 0; i < m; ++i) {
    if (-y[i] > 0.0) breaks.push_back(-y[i]);
    if (1.0 - y[i] > 0.0) breaks.push_back(1.0 - y[i]);
  }
  std::sort(breaks.begin(), breaks.end());
  double prev = 0.0;
  double s_prev = sum;
  double tau = breaks.empty() ? 0.0 : breaks.back();
  for (double b : breaks) {
    const double s_b = s(b);
    if (s_b >= 1.0) {
      tau = prev + (1.0 - s_prev) * (b - prev) / (s_b - s_prev);
      break;
    }
    prev = b;
    s_prev = s_b;
  }
  sum = 0.0;
  for (int i = 0; i < m; ++i) sum += z[i] = Clip(y[i] + tau);

  // Rounding can leave the sum a few ulps short; top up the largest entries.
  if (sum < 1.0) {
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return z[a] > z[b]; });
    for (int i : order) {
      const double deficit = 1.0 - std::accumulate(z.begin(), z.end(), 0.0);
      if (deficit <= 0.0) break;
      z[i] = std::min(1.0, z[i] + deficit);
    }
  }
  return z;
}

double MixedRelaxedObjective(const std::vector<OraclePtr>& oracles,
                             const FractionalAssignment& x, double lambda) {
  CheckBlockOracles(oracles, static_cast<int>(x.size()));
  double worst = 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double value =
        LovaszExtension(BlockOracle(oracles, static_cast<int>(i)), x[i]);
    worst = i == 0 ? value : std::max(worst, value);
    sum += value;
  }
  return (1.0 - lambda) * worst + lambda / static_cast<double>(x.size()) * sum;
}

double CoverageViolation(const FractionalAssignment& x) {
  if (x.empty()) return 0.0;
  double violation = 0.0;
  const std::size_t n = x.front().size();
  for (std::size_t j = 0; j < n; ++j) {
    double mass = 0.0;
    for (const auto& row : x) {
      mass += row[j];
      violation = std::max({violation, -row[j], row[j] - 1.0});
    }
    violation = std::max(violation, 1.0 - mass);
  }
  return violation;
}

RelaxationResult SolveMixedRelaxation(const std::vector<OraclePtr>& oracles,
                                      int m, double lambda,
                                      const RelaxationConfig& config) {
  const int n = CheckBlockOracles(oracles, m);
  config.Validate();
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument("lambda must lie in [0, 1]");
  }

  RelaxationResult result;
  result.x.assign(m, std::vector<double>(n, 1.0 / m));
  result.objective = Evaluate(oracles, result.x, lambda).objective;
  const int window = std::max(50, config.max_iters / 10);
  std::vector<double> column(m);

  for (int start = 0; start <= config.restarts; ++start) {
    FractionalAssignment x = result.x;
    double reference = result.objective;
    int stall = 0;
    bool stalled = false;
    for (int t = 1; t <= config.max_iters; ++t) {
      ++result.iterations;
      Evaluation eval = Evaluate(oracles, x, lambda);
      if (eval.objective < result.objective) {
        result.objective = eval.objective;
        result.x = x;
      }
      if (result.objective <
          reference - config.tolerance * std::max(1.0, std::abs(reference))) {
        reference = result.objective;
        stall = 0;
      } else if (++stall >= window) {
        stalled = true;
        break;
      }
      double norm = 0.0;
      for (const auto& g : eval.direction) {
        for (double v : g) norm += v * v;
      }
      norm = std::sqrt(norm);
      if (norm == 0.0) {
        stalled = true;
        break;
      }
      const double length = config.step_rule == StepRule::kConstant
                                ? config.step_scale
                                : config.step_scale / std::sqrt(t);
      const double step = length / norm;
      for (int j = 0; j < n; ++j) {
        for (int i = 0; i < m; ++i) {
          column[i] = x[i][j] - step * eval.direction[i][j];
        }
        const auto z = ProjectCoverage(column);
        for (int i = 0; i < m; ++i) x[i][j] = z[i];
      }
    }
    result.converged = stalled;
  }
  return result;
}

Partition ThetaRound(const FractionalAssignment& x) {
  if (x.empty()) throw std::invalid_argument("empty fractional assignment");
  const int m = static_cast<int>(x.size());
  const int n = static_cast<int>(x.front().size());
  std::vector<int> assignment(n, 0);
  for (int j = 0; j < n; ++j) {
    for (int i = 1; i < m; ++i) {
      if (x[i][j] > x[assignment[j]][j]) assignment[j] = i;
    }
  }
  return Partition(std::move(assignment), m);
}

RoundingResult LovaszRoundDetailed(const std::vector<OraclePtr>& oracles,
                                   int m, const RelaxationConfig& config) {
  RoundingResult result;
  result.relaxation = SolveSlbRelaxation(oracles, m, config);
  result.partition = ThetaRound(result.relaxation.x);
  return result;
}

}  // namespace subpart
