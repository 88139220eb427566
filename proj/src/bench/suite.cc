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

#include "subpart/bench/suite.h"

#include <chrono>
#include <stdexcept>

#include "subpart/core/partition.h"
#include "subpart/core/rng.h"
#include "subpart/mixed/general_greed_min.h"
#include "subpart/mixed/general_greed_sat.h"
#include "subpart/mixed/general_lovasz_round.h"
#include "subpart/robust/greed_sat.h"
#include "subpart/robust/greedy.h"
#include "subpart/robust/majorization.h"
#include "subpart/robust/relaxation.h"

namespace subpart {
namespace {

bool IsMixed(Suite suite) {
  return suite == Suite::kMixedMax || suite == Suite::kMixedMin;
}

Direction DirectionOf(Suite suite) {
  return suite == Suite::kSfaLambda0 || suite == Suite::kMixedMax
             ? Direction::kMaxMinAvg
             : Direction::kMinMaxAvg;
}

void Validate(const SuiteConfig& config) {
  config.instance.Validate();
  if (config.m_grid.empty()) throw std::invalid_argument("empty m grid");
  for (int m : config.m_grid) {
    if (m < 1 || m > config.instance.n) {
      throw std::invalid_argument("m = " + std::to_string(m) +
                                  " outside [1, n]");
    }
  }
  if (IsMixed(config.suite)) {
    if (config.lambda_grid.empty()) {
      throw std::invalid_argument("empty lambda grid");
    }
    for (double lambda : config.lambda_grid) {
      if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw std::invalid_argument("lambda outside [0, 1]");
      }
    }
  }
  if (config.replicates < 1) {
    throw std::invalid_argument("replicates must be >= 1");
  }
  if (config.seeds.empty()) throw std::invalid_argument("no seeds");
}

IterateTrace TraceOf(const std::string& algorithm, int m, std::uint64_t seed,
                     const IterationTrace& trace) {
  IterateTrace out{algorithm, m, seed, {trace.initial_objective}};
  for (const auto& round : trace.rounds) out.objectives.push_back(round.objective);
  return out;
}

}  // namespace

Suite ParseSuite(const std::string& name) {
  if (name == "sfa0") return Suite::kSfaLambda0;
  if (name == "slb0") return Suite::kSlbLambda0;
  if (name == "mixed-max") return Suite::kMixedMax;
  if (name == "mixed-min") return Suite::kMixedMin;
  throw std::invalid_argument("unknown suite '" + name +
                              "' (expected sfa0, slb0, mixed-max or mixed-min)");
}

std::string SuiteName(Suite suite) {
  switch (suite) {
    case Suite::kSfaLambda0:
      return "sfa0";
    case Suite::kSlbLambda0:
      return "slb0";
    case Suite::kMixedMax:
      return "mixed-max";
    case Suite::kMixedMin:
      return "mixed-min";
  }
  return "unknown";
}

std::vector<std::string> SuiteAlgorithms(Suite suite) {
  switch (suite) {
    case Suite::kSfaLambda0:
      return {"greed_max", "greed_sat", "mmax"};
    case Suite::kSlbLambda0:
      return {"greed_min", "mmin", "lovasz_round"};
    case Suite::kMixedMax:
      return {"general_greed_sat"};
    case Suite::kMixedMin:
      return {"general_greed_min", "general_lovasz_round"};
  }
  return {};
}

BenchReport RunSuite(const SuiteConfig& config) {
  Validate(config);
  using Clock = std::chrono::steady_clock;
  const Direction direction = DirectionOf(config.suite);
  const std::vector<double> lambdas =
      IsMixed(config.suite) ? config.lambda_grid : std::vector<double>{0.0};
  const std::string function = SyntheticFunctionName(config.instance.function);
  const int n = config.instance.n;

  BenchReport report;
  for (std::uint64_t seed : config.seeds) {
    SyntheticConfig instance = config.instance;
    instance.seed = seed;
    const OraclePtr f = MakeSyntheticOracle(instance);
    const std::vector<OraclePtr> fs{f};
    for (int m : config.m_grid) {
      for (double lambda : lambdas) {
        const auto spec = MixedObjectiveSpec::Homogeneous(direction, lambda, f, m);
        auto record = [&](const std::string& algorithm, auto&& run) {
          const auto start = Clock::now();
          const Partition p = run();
          const std::chrono::duration<double, std::milli> elapsed =
              Clock::now() - start;
          report.rows.push_back({function, n, m, lambda, algorithm, seed,
                                 EvaluatePartition(spec, p).mixed,
                                 elapsed.count()});
        };
        for (const std::string& algorithm : SuiteAlgorithms(config.suite)) {
          if (algorithm == "greed_max") {
            record(algorithm, [&] { return GreedMax(*f, m); });
          } else if (algorithm == "greed_sat") {
            record(algorithm, [&] { return GreedSat(fs, m); });
          } else if (algorithm == "mmax") {
            record(algorithm, [&] {
              MajorizationResult r = MMax(fs, m);
              report.traces.push_back(TraceOf(algorithm, m, seed, r.trace));
              return r.partition;
            });
          } else if (algorithm == "greed_min") {
            record(algorithm, [&] { return GreedMin(*f, m); });
          } else if (algorithm == "mmin") {
            record(algorithm, [&] {
              MajorizationResult r = MMin(fs, m);
              report.traces.push_back(TraceOf(algorithm, m, seed, r.trace));
              return r.partition;
            });
          } else if (algorithm == "lovasz_round") {
            record(algorithm, [&] { return LovaszRound(fs, m); });
          } else if (algorithm == "general_greed_sat") {
            record(algorithm, [&] { return GeneralGreedSat(fs, m, lambda); });
          } else if (algorithm == "general_greed_min") {
            record(algorithm, [&] { return GeneralGreedMin(*f, m, lambda); });
          } else if (algorithm == "general_lovasz_round") {
            record(algorithm, [&] { return GeneralLovaszRound(fs, m, lambda); });
          }
        }
        record(kBaselineName, [&] {
          Partition best;
          double best_value = 0.0;
          for (int r = 0; r < config.replicates; ++r) {
            Partition p = BalancedRandomPartition(n, m, DeriveSeed(seed, r));
            const double value = EvaluatePartition(spec, p).mixed;
            if (r == 0 || Better(direction, value, best_value)) {
              best = std::move(p);
              best_value = value;
            }
          }
          return best;
        });
      }
    }
  }
  return report;
}

}  // namespace subpart
