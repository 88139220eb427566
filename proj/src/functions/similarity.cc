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

#include "subpart/functions/similarity.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace subpart {

SimilarityMatrix::SimilarityMatrix(int n, std::vector<double> values,
                                   double symmetry_tolerance)
    : n_(n), values_(std::move(values)) {
  if (n < 1) throw std::invalid_argument("similarity matrix must be non-empty");
  if (static_cast<long long>(values_.size()) != 1LL * n * n) {
    throw std::invalid_argument("similarity matrix needs n*n entries");
  }
  for (int v = 0; v < n; ++v) {
    for (int a = 0; a < n; ++a) {
      const double s = values_[v * n + a];
      if (!std::isfinite(s) || s < 0.0) {
        throw std::invalid_argument("similarity entries must be finite and >= 0");
      }
      if (a > v && std::abs(s - values_[a * n + v]) > symmetry_tolerance) {
        throw std::invalid_argument(
            "similarity matrix is not symmetric at (" + std::to_string(v) +
            ", " + std::to_string(a) + ")");
      }
    }
  }
}

SimilarityMatrix SimilarityMatrix::FromRows(
    const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("similarity matrix must be square");
    }
    values.insert(values.end(), row.begin(), row.end());
  }
  return SimilarityMatrix(n, std::move(values));
}

void SparseKnnGraph::Validate() const {
  const int n = size();
  if (static_cast<int>(self_similarity.size()) != n) {
    throw std::invalid_argument("self_similarity length mismatch");
  }
  for (int v = 0; v < n; ++v) {
    if (self_similarity[v] < 0.0) {
      throw std::invalid_argument("negative self similarity");
    }
    for (const Neighbor& nb : neighbors[v]) {
      if (nb.id < 0 || nb.id >= n || nb.id == v) {
        throw std::invalid_argument("invalid neighbor id in kNN graph");
      }
      if (!(nb.similarity >= 0.0)) {
        throw std::invalid_argument("negative similarity in kNN graph");
      }
    }
  }
}

namespace {

// Indices of the k largest scores (ties to the lower index), best first.
std::vector<Neighbor> TopK(const std::vector<double>& scores, int skip, int k) {
  std::vector<int> ids;
  ids.reserve(scores.size());
  for (int a = 0; a < static_cast<int>(scores.size()); ++a) {
    if (a != skip) ids.push_back(a);
  }
  auto better = [&](int a, int b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return a < b;
  };
  k = std::min<int>(k, ids.size());
  std::partial_sort(ids.begin(), ids.begin() + k, ids.end(), better);
  std::vector<Neighbor> out(k);
  for (int i = 0; i < k; ++i) out[i] = {ids[i], scores[ids[i]]};
  return out;
}

}  // namespace

SparseKnnGraph SparseKnnGraph::FromDense(const SimilarityMatrix& matrix, int k) {
  const int n = matrix.size();
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  SparseKnnGraph graph;
  graph.neighbors.resize(n);
  graph.self_similarity.resize(n);
  std::vector<double> row(n);
  for (int v = 0; v < n; ++v) {
    std::copy(matrix.row(v), matrix.row(v) + n, row.begin());
    graph.neighbors[v] = TopK(row, v, std::min(k, n - 1));
    graph.self_similarity[v] = matrix(v, v);
  }
  return graph;
}

BipartiteCover BipartiteCover::Make(int universe_size,
                                    std::vector<std::vector<int>> keys) {
  if (universe_size < 0) throw std::invalid_argument("negative universe size");
  for (auto& list : keys) {
    for (int key : list) {
      if (key < 0 || key >= universe_size) {
        throw std::invalid_argument("key id " + std::to_string(key) +
                                    " outside universe");
      }
    }
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  BipartiteCover cover;
  cover.universe_size = universe_size;
  cover.keys = std::move(keys);
  return cover;
}

FeatureCounts FeatureCounts::Make(
    int num_features,
    std::vector<std::vector<std::pair<int, double>>> counts) {
  FeatureCounts fc;
  fc.num_features = num_features;
  fc.totals.assign(num_features, 0.0);
  for (auto& item : counts) {
    // Merge repeated features of one item.
    std::sort(item.begin(), item.end());
    std::vector<std::pair<int, double>> merged;
    for (const auto& [u, c] : item) {
      if (u < 0 || u >= num_features) {
        throw std::invalid_argument("feature id outside universe");
      }
      if (!std::isfinite(c) || c < 0.0) {
        throw std::invalid_argument("feature counts must be finite and >= 0");
      }
      if (!merged.empty() && merged.back().first == u) {
        merged.back().second += c;
      } else if (c > 0.0) {
        merged.emplace_back(u, c);
      }
    }
    for (const auto& [u, c] : merged) fc.totals[u] += c;
    item = std::move(merged);
  }
  fc.counts = std::move(counts);
  return fc;
}

FeatureCounts FeatureCounts::FromDenseRows(
    const std::vector<std::vector<double>>& rows) {
  const int d = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  std::vector<std::vector<std::pair<int, double>>> counts(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != d) {
      throw std::invalid_argument("ragged feature rows");
    }
    for (int u = 0; u < d; ++u) {
      if (rows[i][u] != 0.0) counts[i].emplace_back(u, rows[i][u]);
    }
  }
  return Make(d, std::move(counts));
}

std::vector<std::vector<double>> NormalizeColumns(
    std::vector<std::vector<double>> features) {
  if (features.empty()) return features;
  const std::size_t d = features.front().size();
  for (std::size_t c = 0; c < d; ++c) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& row : features) {
      lo = std::min(lo, row[c]);
      hi = std::max(hi, row[c]);
    }
    const double range = hi - lo;
    for (auto& row : features) {
      row[c] = range > 0.0 ? (row[c] - lo) / range : 0.0;
    }
  }
  return features;
}

namespace {

void CheckFeatures(const std::vector<std::vector<double>>& features) {
  if (features.size() < 2) throw std::invalid_argument("need n >= 2 items");
  const std::size_t d = features.front().size();
  if (d < 1) throw std::invalid_argument("need d >= 1 features");
  for (const auto& row : features) {
    if (row.size() != d) throw std::invalid_argument("ragged feature rows");
    for (double x : row) {
      if (!std::isfinite(x)) throw std::invalid_argument("non-finite feature");
    }
  }
}

double Distance(const std::vector<double>& a, const std::vector<double>& b) {
  double sum = 0.0;
  for (std::size_t c = 0; c < a.size(); ++c) {
    const double diff = a[c] - b[c];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

double MaxPairwiseDistance(const std::vector<std::vector<double>>& x) {
  double best = 0.0;
  for (std::size_t v = 0; v < x.size(); ++v) {
    for (std::size_t a = v + 1; a < x.size(); ++a) {
      best = std::max(best, Distance(x[v], x[a]));
    }
  }
  return best;
}

}  // namespace

KnnBuildResult BuildKnnSimilarity(
    const std::vector<std::vector<double>>& features, int k, bool normalize) {
  CheckFeatures(features);
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const auto x = normalize ? NormalizeColumns(features) : features;
  const int n = static_cast<int>(x.size());

  KnnBuildResult result;
  result.effective_k = k;
  if (k > n - 1) {
    result.effective_k = n - 1;
    result.warnings.push_back("k=" + std::to_string(k) + " >= n=" +
                              std::to_string(n) + "; clamped to " +
                              std::to_string(n - 1));
  }
  const double c = MaxPairwiseDistance(x);
  result.max_distance = c;

  auto& graph = result.graph;
  graph.neighbors.resize(n);
  graph.self_similarity.assign(n, c);
  std::vector<double> scores(n);
  for (int v = 0; v < n; ++v) {
    for (int a = 0; a < n; ++a) {
      // Clamp guards against C - d being a hair below 0 for the farthest pair.
      scores[a] = a == v ? 0.0 : std::max(0.0, c - Distance(x[v], x[a]));
    }
    graph.neighbors[v] = TopK(scores, v, result.effective_k);
  }
  return result;
}

SimilarityMatrix DenseDistanceSimilarity(
    const std::vector<std::vector<double>>& features, bool normalize) {
  CheckFeatures(features);
  const auto x = normalize ? NormalizeColumns(features) : features;
  const int n = static_cast<int>(x.size());
  const double c = MaxPairwiseDistance(x);
  std::vector<double> values(static_cast<std::size_t>(n) * n);
  for (int v = 0; v < n; ++v) {
    values[v * n + v] = c;
    for (int a = v + 1; a < n; ++a) {
      const double s = std::max(0.0, c - Distance(x[v], x[a]));
      values[v * n + a] = s;
      values[a * n + v] = s;
    }
  }
  return SimilarityMatrix(n, std::move(values));
}

SimilarityMatrix RbfSimilarity(const std::vector<std::vector<double>>& features,
                               double sigma, bool normalize) {
  CheckFeatures(features);
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be > 0");
  const auto x = normalize ? NormalizeColumns(features) : features;
  const int n = static_cast<int>(x.size());
  const double scale = 1.0 / (2.0 * sigma * sigma);
  std::vector<double> values(static_cast<std::size_t>(n) * n);
  for (int v = 0; v < n; ++v) {
    values[v * n + v] = 1.0;
    for (int a = v + 1; a < n; ++a) {
      const double d = Distance(x[v], x[a]);
      const double s = std::exp(-d * d * scale);
      values[v * n + a] = s;
      values[a * n + v] = s;
    }
  }
  return SimilarityMatrix(n, std::move(values));
}

}  // namespace subpart
