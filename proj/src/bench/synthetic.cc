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

#include "subpart/bench/synthetic.h"

#include <stdexcept>
#include <vector>

#include "subpart/core/rng.h"
#include "subpart/functions/functions.h"

namespace subpart {

std::string SyntheticFunctionName(SyntheticFunction function) {
  switch (function) {
    case SyntheticFunction::kFacilityUniform:
      return "facility";
    case SyntheticFunction::kSetCoverBernoulli:
      return "setcover";
    case SyntheticFunction::kCardinality:
      return "cardinality";
  }
  return "unknown";
}

SyntheticFunction ParseSyntheticFunction(const std::string& name) {
  if (name == "facility") return SyntheticFunction::kFacilityUniform;
  if (name == "setcover") return SyntheticFunction::kSetCoverBernoulli;
  if (name == "cardinality") return SyntheticFunction::kCardinality;
  throw std::invalid_argument("unknown synthetic function '" + name +
                              "' (expected facility, setcover or cardinality)");
}

void SyntheticConfig::Validate() const {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (u < 1) throw std::invalid_argument("u must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("p must lie in [0, 1]");
  }
}

SimilarityMatrix GenFacilityUniform(const SyntheticConfig& config) {
  config.Validate();
  const int n = config.n;
  std::vector<double> values(static_cast<std::size_t>(n) * n);
  Rng rng(config.seed);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double s = rng.Uniform();
      values[i * n + j] = s;
      values[j * n + i] = s;
    }
  }
  return SimilarityMatrix(n, std::move(values));
}

BipartiteCover GenSetCoverBernoulli(const SyntheticConfig& config) {
  config.Validate();
  std::vector<std::vector<int>> keys(config.n);
  Rng rng(config.seed);
  for (int v = 0; v < config.n; ++v) {
    for (int k = 0; k < config.u; ++k) {
      if (rng.Bernoulli(config.p)) keys[v].push_back(k);
    }
  }
  return BipartiteCover::Make(config.u, std::move(keys));
}

OraclePtr MakeSyntheticOracle(const SyntheticConfig& config) {
  switch (config.function) {
    case SyntheticFunction::kFacilityUniform:
      return FacilityLocation(GenFacilityUniform(config));
    case SyntheticFunction::kSetCoverBernoulli:
      return SetCover(GenSetCoverBernoulli(config));
    case SyntheticFunction::kCardinality:
      config.Validate();
      return Cardinality(config.n);
  }
  throw std::invalid_argument("unknown synthetic function");
}

}  // namespace subpart
