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

#include "subpart/functions/functions.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace subpart {
namespace {

// Facility location over a list of (client, similarity) pairs per facility:
// covers[a] lists every client v that facility a can serve and how well.
class CoverageFacility : public SubmodularOracle {
 public:
  CoverageFacility(int n, std::vector<std::vector<Neighbor>> covers)
      : n_(n), covers_(std::move(covers)) {}

  int ground_size() const override { return n_; }
  std::unique_ptr<OracleState> NewState() const override {
    return std::make_unique<State>(this);
  }

 private:
  class State : public OracleState {
   public:
    explicit State(const CoverageFacility* f)
        : OracleState(f->n_), f_(f), best_(f->n_, 0.0) {}
    double Value() const override { return value_; }
    std::unique_ptr<OracleState> Clone() const override {
      return std::make_unique<State>(*this);
    }

   protected:
    double DoGain(int item) const override {
      double gain = 0.0;
      for (const Neighbor& c : f_->covers_[item]) {
        if (c.similarity > best_[c.id]) gain += c.similarity - best_[c.id];
      }
      return gain;
    }
    void DoAdd(int item) override {
      double gain = 0.0;
      for (const Neighbor& c : f_->covers_[item]) {
        if (c.similarity > best_[c.id]) {
          gain += c.similarity - best_[c.id];
          best_[c.id] = c.similarity;
        }
      }
      value_ += gain;
    }

   private:
    const CoverageFacility* f_;
    std::vector<double> best_;
    double value_ = 0.0;
  };

  int n_;
  std::vector<std::vector<Neighbor>> covers_;
};

// Dense facility location; rows of a symmetric matrix double as the
// per-facility coverage lists.
class DenseFacility : public SubmodularOracle {
 public:
  explicit DenseFacility(SimilarityMatrix s) : s_(std::move(s)) {}

  int ground_size() const override { return s_.size(); }
  std::unique_ptr<OracleState> NewState() const override {
    return std::make_unique<State>(this);
  }

 private:
  class State : public OracleState {
   public:
    explicit State(const DenseFacility* f)
        : OracleState(f->s_.size()), f_(f), best_(f->s_.size(), 0.0) {}
    double Value() const override { return value_; }
    std::unique_ptr<OracleState> Clone() const override {
      return std::make_unique<State>(*this);
    }

   protected:
    double DoGain(int item) const override {
      const double* row = f_->s_.row(item);
      double gain = 0.0;
      for (std::size_t v = 0; v < best_.size(); ++v) {
        if (row[v] > best_[v]) gain += row[v] - best_[v];
      }
      return gain;
    }
    void DoAdd(int item) override {
      const double* row = f_->s_.row(item);
      double gain = 0.0;
      for (std::size_t v = 0; v < best_.size(); ++v) {
        if (row[v] > best_[v]) {
          gain += row[v] - best_[v];
          best_[v] = row[v];
        }
      }
      value_ += gain;
    }

   private:
    const DenseFacility* f_;
    std::vector<double> best_;
    double value_ = 0.0;
  };

  SimilarityMatrix s_;
};

class SetCoverFunction : public SubmodularOracle {
 public:
  explicit SetCoverFunction(BipartiteCover cover) : cover_(std::move(cover)) {}

  int ground_size() const override { return cover_.size(); }
  std::unique_ptr<OracleState> NewState() const override {
    return std::make_unique<State>(this);
  }

 private:
  class State : public OracleState {
   public:
    explicit State(const SetCoverFunction* f)
        : OracleState(f->cover_.size()),
          f_(f),
          count_(f->cover_.universe_size, 0) {}
    double Value() const override { return static_cast<double>(covered_); }
    std::unique_ptr<OracleState> Clone() const override {
      return std::make_unique<State>(*this);
    }

   protected:
    double DoGain(int item) const override {
      int fresh = 0;
      for (int key : f_->cover_.keys[item]) fresh += count_[key] == 0;
      return static_cast<double>(fresh);
    }
    void DoAdd(int item) override {
      for (int key : f_->cover_.keys[item]) {
        if (count_[key]++ == 0) ++covered_;
      }
    }

   private:
    const SetCoverFunction* f_;
    std::vector<int> count_;
    int covered_ = 0;
  };

  BipartiteCover cover_;
};

class FeatureBasedFunction : public SubmodularOracle {
 public:
  explicit FeatureBasedFunction(FeatureCounts counts)
      : counts_(std::move(counts)) {}

  int ground_size() const override { return counts_.size(); }
  std::unique_ptr<OracleState> NewState() const override {
    return std::make_unique<State>(this);
  }

 private:
  class State : public OracleState {
   public:
    explicit State(const FeatureBasedFunction* f)
        : OracleState(f->counts_.size()),
          f_(f),
          mass_(f->counts_.num_features, 0.0) {}
    double Value() const override { return value_; }
    std::unique_ptr<OracleState> Clone() const override {
      return std::make_unique<State>(*this);
    }

   protected:
    double DoGain(int item) const override {
      double gain = 0.0;
      for (const auto& [u, c] : f_->counts_.counts[item]) {
        gain += f_->counts_.totals[u] *
                (std::log1p(mass_[u] + c) - std::log1p(mass_[u]));
      }
      return gain;
    }
    void DoAdd(int item) override {
      value_ += DoGain(item);
      for (const auto& [u, c] : f_->counts_.counts[item]) mass_[u] += c;
    }

   private:
    const FeatureBasedFunction* f_;
    std::vector<double> mass_;
    double value_ = 0.0;
  };

  FeatureCounts counts_;
};

class ModularOracle : public SubmodularOracle {
 public:
  explicit ModularOracle(std::vector<double> w) : w_(std::move(w)) {}

  int ground_size() const override { return static_cast<int>(w_.size()); }
  std::unique_ptr<OracleState> NewState() const override {
    return std::make_unique<State>(this);
  }

 private:
  class State : public OracleState {
   public:
    explicit State(const ModularOracle* f)
        : OracleState(f->ground_size()), f_(f) {}
    double Value() const override { return value_; }
    std::unique_ptr<OracleState> Clone() const override {
      return std::make_unique<State>(*this);
    }

   protected:
    double DoGain(int item) const override { return f_->w_[item]; }
    void DoAdd(int item) override { value_ += f_->w_[item]; }

   private:
    const ModularOracle* f_;
    double value_ = 0.0;
  };

  std::vector<double> w_;
};

void CheckLabels(const std::vector<int>& labels, int n) {
  if (static_cast<int>(labels.size()) != n) {
    throw std::invalid_argument("labels length does not match ground set");
  }
}

}  // namespace

OraclePtr FacilityLocation(SimilarityMatrix similarity) {
  if (similarity.size() < 1) throw std::invalid_argument("empty similarity");
  return std::make_shared<DenseFacility>(std::move(similarity));
}

OraclePtr FacilityLocation(SparseKnnGraph graph) {
  graph.Validate();
  const int n = graph.size();
  if (n < 1) throw std::invalid_argument("empty kNN graph");
  // Invert adjacency: facility a serves every v that lists a as a neighbor.
  std::vector<std::vector<Neighbor>> covers(n);
  for (int v = 0; v < n; ++v) {
    if (graph.self_similarity[v] > 0.0) {
      covers[v].push_back({v, graph.self_similarity[v]});
    }
    for (const Neighbor& nb : graph.neighbors[v]) {
      covers[nb.id].push_back({v, nb.similarity});
    }
  }
  return std::make_shared<CoverageFacility>(n, std::move(covers));
}

OraclePtr SetCover(BipartiteCover cover) {
  if (cover.size() < 1) throw std::invalid_argument("empty ground set");
  return std::make_shared<SetCoverFunction>(
      BipartiteCover::Make(cover.universe_size, std::move(cover.keys)));
}

OraclePtr FeatureBased(FeatureCounts counts) {
  if (counts.size() < 1) throw std::invalid_argument("empty ground set");
  return std::make_shared<FeatureBasedFunction>(std::move(counts));
}

OraclePtr ClusteredFacility(const SimilarityMatrix& similarity,
                            const std::vector<int>& labels) {
  const int n = similarity.size();
  CheckLabels(labels, n);
  std::vector<double> masked(similarity.values());
  for (int v = 0; v < n; ++v) {
    for (int a = 0; a < n; ++a) {
      if (labels[v] != labels[a]) masked[v * n + a] = 0.0;
    }
  }
  return FacilityLocation(SimilarityMatrix(n, std::move(masked)));
}

OraclePtr ClusteredFacility(const SparseKnnGraph& graph,
                            const std::vector<int>& labels) {
  CheckLabels(labels, graph.size());
  SparseKnnGraph masked = graph;
  for (int v = 0; v < masked.size(); ++v) {
    auto& list = masked.neighbors[v];
    list.erase(std::remove_if(list.begin(), list.end(),
                              [&](const Neighbor& nb) {
                                return labels[nb.id] != labels[v];
                              }),
               list.end());
  }
  return FacilityLocation(std::move(masked));
}

OraclePtr Modular(std::vector<double> weights) {
  if (weights.empty()) throw std::invalid_argument("empty ground set");
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) {
      throw std::invalid_argument(
          "modular weights must be finite and nonnegative");
    }
  }
  return std::make_shared<ModularOracle>(std::move(weights));
}

OraclePtr Cardinality(int ground_size) {
  if (ground_size < 1) throw std::invalid_argument("empty ground set");
  return Modular(std::vector<double>(ground_size, 1.0));
}

}  // namespace subpart
