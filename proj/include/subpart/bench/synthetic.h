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

#ifndef SUBPART_BENCH_SYNTHETIC_H_
#define SUBPART_BENCH_SYNTHETIC_H_

#include <cstdint>
#include <string>

#include "subpart/core/oracle.h"
#include "subpart/functions/similarity.h"

namespace subpart {

enum class SyntheticFunction {
  kFacilityUniform,    // facility location, similarities ~ U[0,1]
  kSetCoverBernoulli,  // set cover, each (item, key) edge with probability p
  kCardinality,        // f(A) = |A|
};

std::string SyntheticFunctionName(SyntheticFunction function);
// Accepts "facility", "setcover" and "cardinality".
SyntheticFunction ParseSyntheticFunction(const std::string& name);

struct SyntheticConfig {
  int n = 40;
  SyntheticFunction function = SyntheticFunction::kFacilityUniform;
  int u = 40;  // set cover key universe
  double p = 0.2;
  std::uint64_t seed = 0;

  void Validate() const;
};

// Entries (i, j) with i <= j, diagonal included, are drawn i.i.d. from
// U[0,1] in row-major order and mirrored.
SimilarityMatrix GenFacilityUniform(const SyntheticConfig& config);

// Item-major draws: item v covers key k with probability p.
BipartiteCover GenSetCoverBernoulli(const SyntheticConfig& config);

OraclePtr MakeSyntheticOracle(const SyntheticConfig& config);

}  // namespace subpart

#endif  // SUBPART_BENCH_SYNTHETIC_H_
