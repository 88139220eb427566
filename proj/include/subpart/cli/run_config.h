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

#ifndef SUBPART_CLI_RUN_CONFIG_H_
#define SUBPART_CLI_RUN_CONFIG_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subpart/core/oracle.h"
#include "subpart/core/partition.h"
#include "subpart/robust/relaxation.h"

namespace subpart {

// One submodular function. Paths are resolved against the config file's
// directory.
//   modular             path: weights file
//   cardinality         n
//   facility            path: n x n similarity CSV
//   facility-knn        path: feature CSV, k neighbours (default 10)
//   setcover            path: "item key" edge list; optional items, universe
//   feature             path: "item feature count" file; optional items
//   clustered-facility  path: similarity CSV, labels: label file
struct FunctionSpec {
  std::string type;
  std::string path;
  std::string labels;
  int n = 0;
  int k = 10;
  std::optional<int> items;
  std::optional<int> universe;
};

struct RunConfig {
  Direction objective = Direction::kMaxMinAvg;
  double lambda = 0.0;
  int m = 2;
  std::string algorithm = "greed_max";
  // One function (homogeneous) or m functions.
  std::vector<FunctionSpec> functions;
  std::uint64_t seed = 0;
  std::optional<double> epsilon;
  double alpha = 1.0;
  std::optional<int> subsample;
  int max_rounds = 50;
  RelaxationConfig relaxation;
};

// Parses the JSON config. Syntax errors, wrong value types and unknown keys
// raise ParseError (syntax errors carry line and column).
RunConfig ParseRunConfig(const std::string& text, const std::string& base_dir);
RunConfig LoadRunConfig(const std::string& path);

OraclePtr BuildOracle(const FunctionSpec& spec);
std::vector<OraclePtr> BuildOracles(const RunConfig& config);

// Algorithm names accepted by RunAlgorithm, in a fixed order.
std::vector<std::string> AlgorithmNames();

// Runs config.algorithm. An unknown name, an algorithm for the other
// objective, or a homogeneous-only algorithm given several functions
// raises std::invalid_argument. Worst-case algorithms ignore lambda.
Partition RunAlgorithm(const RunConfig& config,
                       const std::vector<OraclePtr>& oracles);

}  // namespace subpart

#endif  // SUBPART_CLI_RUN_CONFIG_H_
