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

#ifndef SUBPART_FUNCTIONS_FUNCTIONS_H_
#define SUBPART_FUNCTIONS_FUNCTIONS_H_

#include <memory>
#include <vector>

#include "subpart/core/oracle.h"
#include "subpart/functions/similarity.h"

namespace subpart {

// f(A) = sum_v max_{a in A} s_{v,a}, with the max over an empty A taken as 0.
OraclePtr FacilityLocation(SimilarityMatrix similarity);

// Sparse variant: each v only sees the a in A on its adjacency list, plus
// itself (credited self_similarity[v]) when v is in A.
OraclePtr FacilityLocation(SparseKnnGraph graph);

// f(A) = number of distinct keys adjacent to A.
OraclePtr SetCover(BipartiteCover cover);

// f(A) = sum_u m_u(V) log(1 + m_u(A)).
OraclePtr FeatureBased(FeatureCounts counts);

// Per-class facility location: sum_y sum_{v in V^y} max_{a in A ∩ V^y} s_{v,a}.
OraclePtr ClusteredFacility(const SimilarityMatrix& similarity,
                            const std::vector<int>& labels);
OraclePtr ClusteredFacility(const SparseKnnGraph& graph,
                            const std::vector<int>& labels);

// f(A) = sum_{a in A} w_a. Negative weights are rejected.
OraclePtr Modular(std::vector<double> weights);

// f(A) = |A|.
OraclePtr Cardinality(int ground_size);

}  // namespace subpart

#endif  // SUBPART_FUNCTIONS_FUNCTIONS_H_
