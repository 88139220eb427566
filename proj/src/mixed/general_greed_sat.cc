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

#include "subpart/mixed/general_greed_sat.h"

#include <algorithm>
#include <memory>
#include <queue>
#include <stdexcept>

#include "subpart/robust/greedy.h"

namespace subpart {
namespace {

void CheckLambda(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument("lambda must lie in [0, 1]");
  }
}

struct PairEntry {
  double bound;
  int block;
  int item;
  // Number of committed items when `bound` was computed.
  int stamp;
};

struct PairEntryLess {
  bool operator()(const PairEntry& a, const PairEntry& b) const {
    if (a.bound != b.bound) return a.bound < b.bound;
    if (a.block != b.block) return a.block > b.block;
    return a.item > b.item;
  }
};

// Tracks f_i(A_i) for every block and the running sum used by the average
// term, so a pair gain needs a single oracle call.
class MixedState {
 public:
  MixedState(const std::vector<OraclePtr>& oracles, int m, double lambda)
      : m_(m), lambda_bar_(1.0 - lambda), share_(lambda / m) {
    for (int i = 0; i < m; ++i) {
      states_.push_back(BlockOracle(oracles, i).NewState());
    }
    values_.assign(m, 0.0);
  }

  double Mixed(int block) const {
    return lambda_bar_ * values_[block] + share_ * total_;
  }

  // Increase of sum_k min{F_k, c} when `item` joins `block`. Written as a
  // shared term plus a correction for `block` so that equal gains on
  // equally filled blocks compare equal in floating point.
  double Gain(int block, int item, double c) const {
    const double g = states_[block]->Gain(item);
    const double common = share_ * g;
    double sum = 0.0;
    for (int k = 0; k < m_; ++k) sum += std::min(common, Room(k, c));
    const double room = Room(block, c);
    return sum + (std::min(common + lambda_bar_ * g, room) -
                  std::min(common, room));
  }

  double Room(int block, double c) const {
    return std::max(c - Mixed(block), 0.0);
  }

  void Add(int block, int item) {
    OracleState& state = *states_[block];
    state.Add(item);
    total_ += state.Value() - values_[block];
    values_[block] = state.Value();
  }

 private:
  int m_;
  double lambda_bar_;
  double share_;
  std::vector<std::unique_ptr<OracleState>> states_;
  std::vector<double> values_;
  double total_ = 0.0;
};

}  // namespace

std::vector<double> MixedBlockValues(const std::vector<OraclePtr>& oracles,
                                     const Partition& partition,
                                     double lambda) {
  CheckLambda(lambda);
  const int m = partition.num_blocks();
  CheckBlockOracles(oracles, m);
  const auto blocks = partition.Blocks();
  std::vector<double> f(m);
  double total = 0.0;
  for (int i = 0; i < m; ++i) {
    f[i] = BlockOracle(oracles, i).Evaluate(blocks[i]);
    total += f[i];
  }
  std::vector<double> mixed(m);
  for (int i = 0; i < m; ++i) {
    mixed[i] = (1.0 - lambda) * f[i] + lambda * (total / m);
  }
  return mixed;
}

double TruncatedMixedWelfare(const std::vector<OraclePtr>& oracles,
                             const Partition& partition, double lambda,
                             double c) {
  double sum = 0.0;
  for (double v : MixedBlockValues(oracles, partition, lambda)) {
    sum += std::min(v, c);
  }
  return sum / partition.num_blocks();
}

Partition MixedSwpGreedy(const std::vector<OraclePtr>& oracles, int m,
                         double lambda, double c) {
  CheckLambda(lambda);
  if (lambda == 0.0) return GreedSwp(oracles, m, c);
  const int n = CheckBlockOracles(oracles, m);
  if (!(c >= 0.0)) throw std::invalid_argument("truncation level must be >= 0");
  MixedState state(oracles, m, lambda);
  Partition partition(n, m);
  std::vector<char> assigned(n, 0);
  std::priority_queue<PairEntry, std::vector<PairEntry>, PairEntryLess> heap;
  for (int i = 0; i < m; ++i) {
    for (int v = 0; v < n; ++v) heap.push({state.Gain(i, v, c), i, v, 0});
  }
  for (int step = 0; step < n; ++step) {
    for (;;) {
      const PairEntry top = heap.top();
      heap.pop();
      if (assigned[top.item]) continue;
      if (top.stamp != step) {
        heap.push({state.Gain(top.block, top.item, c), top.block, top.item,
                   step});
        continue;
      }
      assigned[top.item] = 1;
      state.Add(top.block, top.item);
      partition.Assign(top.item, top.block);
      break;
    }
  }
  return partition;
}

GreedSatResult GeneralGreedSatDetailed(const std::vector<OraclePtr>& oracles,
                                       int m, double lambda,
                                       const GreedSatConfig& config) {
  CheckLambda(lambda);
  if (lambda == 0.0) return GreedSatDetailed(oracles, m, config);
  const int n = CheckBlockOracles(oracles, m);
  config.Validate();
  std::vector<int> all(n);
  for (int v = 0; v < n; ++v) all[v] = v;
  double c_max = 0.0;
  for (int i = 0; i < m; ++i) c_max += BlockOracle(oracles, i).Evaluate(all);
  return SaturationSearch(
      c_max, config,
      [&](double c) { return MixedSwpGreedy(oracles, m, lambda, c); },
      [&](const Partition& p, double c) {
        return TruncatedMixedWelfare(oracles, p, lambda, c);
      });
}

}  // namespace subpart
