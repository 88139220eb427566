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

#ifndef SUBPART_FUNCTIONS_SIMILARITY_H_
#define SUBPART_FUNCTIONS_SIMILARITY_H_

#include <string>
#include <utility>
#include <vector>

namespace subpart {

// Dense symmetric nonnegative similarity matrix, row-major. Symmetry and
// nonnegativity are validated once at construction.
class SimilarityMatrix {
 public:
  SimilarityMatrix() = default;
  SimilarityMatrix(int n, std::vector<double> values,
                   double symmetry_tolerance = 1e-12);
  static SimilarityMatrix FromRows(const std::vector<std::vector<double>>& rows);

  int size() const { return n_; }
  double operator()(int v, int a) const { return values_[v * n_ + a]; }
  const double* row(int v) const { return values_.data() + v * n_; }
  const std::vector<double>& values() const { return values_; }

 private:
  int n_ = 0;
  std::vector<double> values_;
};

struct Neighbor {
  int id = 0;
  double similarity = 0.0;
  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

// Per-item adjacency lists of the k most similar other items. Self
// similarities are kept separately so facility location can credit an item
// for representing itself; they default to 0.
struct SparseKnnGraph {
  std::vector<std::vector<Neighbor>> neighbors;
  std::vector<double> self_similarity;

  int size() const { return static_cast<int>(neighbors.size()); }
  void Validate() const;

  // Keeps the k largest off-diagonal entries of every row (ties to the lower
  // id) and copies the diagonal into self_similarity.
  static SparseKnnGraph FromDense(const SimilarityMatrix& matrix, int k);
};

// Bipartite item-to-key incidence for set cover functions.
struct BipartiteCover {
  int universe_size = 0;
  std::vector<std::vector<int>> keys;  // per item, sorted and deduplicated

  // Sorts and deduplicates keys; throws if any key is outside [0, u).
  static BipartiteCover Make(int universe_size,
                             std::vector<std::vector<int>> keys);
  int size() const { return static_cast<int>(keys.size()); }
};

// Sparse nonnegative feature counts m_u(a) per item.
struct FeatureCounts {
  int num_features = 0;
  std::vector<std::vector<std::pair<int, double>>> counts;  // per item
  std::vector<double> totals;                               // m_u(V)

  static FeatureCounts Make(
      int num_features,
      std::vector<std::vector<std::pair<int, double>>> counts);
  static FeatureCounts FromDenseRows(
      const std::vector<std::vector<double>>& rows);
  int size() const { return static_cast<int>(counts.size()); }
};

struct KnnBuildResult {
  SparseKnnGraph graph;
  double max_distance = 0.0;  // C in s = C - ||x_v - x_a||
  int effective_k = 0;
  std::vector<std::string> warnings;
};

// Similarity s_{v,a} = C - ||x_v - x_a||_2 with C the largest pairwise
// distance, sparsified to each item's k most similar neighbors. With
// `normalize`, every feature column is first min-max scaled to [0, 1]
// (constant columns become 0). k >= n is clamped to n - 1 and recorded in
// `warnings`.
KnnBuildResult BuildKnnSimilarity(const std::vector<std::vector<double>>& features,
                                  int k, bool normalize);

// Same rule without sparsification.
SimilarityMatrix DenseDistanceSimilarity(
    const std::vector<std::vector<double>>& features, bool normalize);

// RBF kernel s_{v,a} = exp(-||x_v - x_a||^2 / (2 sigma^2)); sigma > 0.
SimilarityMatrix RbfSimilarity(const std::vector<std::vector<double>>& features,
                               double sigma, bool normalize);

// Per-column min-max scaling to [0, 1].
std::vector<std::vector<double>> NormalizeColumns(
    std::vector<std::vector<double>> features);

}  // namespace subpart

#endif  // SUBPART_FUNCTIONS_SIMILARITY_H_
