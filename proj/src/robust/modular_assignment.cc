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

#include "subpart/robust/modular_assignment.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace subpart {
namespace {

enum class Goal { kRaiseMin, kLowerMax };

class ModularInstance {
 public:
  ModularInstance(const std::vector<ModularFunction>& fns, int m)
      : fns_(fns), m_(m) {
    if (m < 1) throw std::invalid_argument("number of blocks must be >= 1");
    if (fns.empty() ||
        (fns.size() != 1 && static_cast<int>(fns.size()) != m)) {
      throw std::invalid_argument("expected 1 or " + std::to_string(m) +
                                  " modular functions");
    }
    n_ = static_cast<int>(fns.front().weights.size());
    for (const auto& f : fns) {
      if (static_cast<int>(f.weights.size()) != n_) {
        throw std::invalid_argument("modular functions differ in length");
      }
    }
  }

  int n() const { return n_; }
  int m() const { return m_; }
  double weight(int block, int item) const {
    return fns_[fns_.size() == 1 ? 0 : block].weights[item];
  }
  double offset(int block) const {
    return fns_[fns_.size() == 1 ? 0 : block].offset;
  }
  double MaxWeight(int item) const {
    double w = weight(0, item);
    for (int i = 1; i < m_; ++i) w = std::max(w, weight(i, item));
    return w;
  }

  // Items by decreasing largest weight, lowest id first on ties.
  std::vector<int> HeaviestFirst() const {
    std::vector<int> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> key(n_);
    for (int j = 0; j < n_; ++j) key[j] = MaxWeight(j);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return key[a] > key[b]; });
    return order;
  }

  std::vector<double> Loads(const std::vector<int>& assignment) const {
    std::vector<double> loads(m_);
    for (int i = 0; i < m_; ++i) loads[i] = offset(i);
    for (int j = 0; j < n_; ++j) loads[assignment[j]] += weight(assignment[j], j);
    return loads;
  }

 private:
  const std::vector<ModularFunction>& fns_;
  int m_;
  int n_ = 0;
};

// Extreme block value and how many blocks attain it.
struct Key {
  double extreme;
  int count;
};

Key KeyOf(const std::vector<double>& loads, Goal goal) {
  Key key{loads[0], 0};
  for (double v : loads) {
    if (goal == Goal::kRaiseMin ? v < key.extreme : v > key.extreme) {
      key.extreme = v;
    }
  }
  for (double v : loads) key.count += v == key.extreme;
  return key;
}

bool Improves(const Key& a, const Key& b, Goal goal) {
  if (a.extreme != b.extreme) {
    return goal == Goal::kRaiseMin ? a.extreme > b.extreme
                                   : a.extreme < b.extreme;
  }
  return a.count < b.count;
}

// Tries to move `j` from its block p to q. Keeps the move when it improves
// the key.
bool TryMove(const ModularInstance& inst, Goal goal, const Key& key, int j,
             int q, std::vector<int>& assignment, std::vector<double>& loads) {
  const int p = assignment[j];
  const double old_p = loads[p];
  const double old_q = loads[q];
  loads[p] = old_p - inst.weight(p, j);
  loads[q] = old_q + inst.weight(q, j);
  if (Improves(KeyOf(loads, goal), key, goal)) {
    assignment[j] = q;
    return true;
  }
  loads[p] = old_p;
  loads[q] = old_q;
  return false;
}

// Exchanges j and k (in different blocks) when that improves the key.
bool TrySwap(const ModularInstance& inst, Goal goal, const Key& key, int j,
             int k, std::vector<int>& assignment, std::vector<double>& loads) {
  const int p = assignment[j];
  const int q = assignment[k];
  const double old_p = loads[p];
  const double old_q = loads[q];
  loads[p] = old_p - inst.weight(p, j) + inst.weight(p, k);
  loads[q] = old_q - inst.weight(q, k) + inst.weight(q, j);
  if (Improves(KeyOf(loads, goal), key, goal)) {
    assignment[j] = q;
    assignment[k] = p;
    return true;
  }
  loads[p] = old_p;
  loads[q] = old_q;
  return false;
}

// First-improvement local search until no move improves the key. Single-item
// moves are tried first, then swaps of two items in different blocks. Only
// moves touching an extreme block (a minimum block when raising the minimum,
// a maximum block when lowering the maximum) can improve the key.
void LocalSearch(const ModularInstance& inst, Goal goal,
                 std::vector<int>& assignment) {
  const int n = inst.n();
  const int m = inst.m();
  if (m < 2) return;
  std::vector<double> loads = inst.Loads(assignment);
  const long long cap = 100LL * n * m + 100;
  for (long long round = 0; round < cap; ++round) {
    const Key key = KeyOf(loads, goal);
    auto extreme = [&](int block) { return loads[block] == key.extreme; };
    bool moved = false;
    for (int j = 0; j < n && !moved; ++j) {
      const int p = assignment[j];
      if (goal == Goal::kLowerMax && !extreme(p)) continue;
      for (int q = 0; q < m && !moved; ++q) {
        if (q == p || (goal == Goal::kRaiseMin && !extreme(q))) continue;
        moved = TryMove(inst, goal, key, j, q, assignment, loads);
      }
    }
    for (int j = 0; j < n && !moved; ++j) {
      if (!extreme(assignment[j])) continue;
      for (int k = 0; k < n && !moved; ++k) {
        if (assignment[k] == assignment[j]) continue;
        moved = TrySwap(inst, goal, key, j, k, assignment, loads);
      }
    }
    if (!moved) break;
  }
}

// Max-min: the lowest block repeatedly takes the remaining item it values
// most. Min-max: heaviest item first, to the block whose resulting value is
// smallest.
std::vector<int> GreedyStart(const ModularInstance& inst, Goal goal) {
  const int n = inst.n();
  const int m = inst.m();
  std::vector<int> assignment(n, 0);
  std::vector<double> loads(m);
  for (int i = 0; i < m; ++i) loads[i] = inst.offset(i);
  if (goal == Goal::kLowerMax) {
    for (int j : inst.HeaviestFirst()) {
      int target = 0;
      for (int i = 1; i < m; ++i) {
        if (loads[i] + inst.weight(i, j) < loads[target] + inst.weight(target, j)) {
          target = i;
        }
      }
      assignment[j] = target;
      loads[target] += inst.weight(target, j);
    }
    return assignment;
  }
  std::vector<char> taken(n, 0);
  for (int step = 0; step < n; ++step) {
    const int target = static_cast<int>(
        std::min_element(loads.begin(), loads.end()) - loads.begin());
    int pick = -1;
    for (int j = 0; j < n; ++j) {
      if (!taken[j] &&
          (pick < 0 || inst.weight(target, j) > inst.weight(target, pick))) {
        pick = j;
      }
    }
    taken[pick] = 1;
    assignment[pick] = target;
    loads[target] += inst.weight(target, pick);
  }
  return assignment;
}

Partition Solve(const std::vector<ModularFunction>& fns, int m,
                const Partition* incumbent, Goal goal) {
  const ModularInstance inst(fns, m);
  if (incumbent != nullptr && (incumbent->ground_size() != inst.n() ||
                               incumbent->num_blocks() != m)) {
    throw std::invalid_argument("incumbent does not match the instance");
  }
  std::vector<int> best = GreedyStart(inst, goal);
  LocalSearch(inst, goal, best);
  Key best_key = KeyOf(inst.Loads(best), goal);
  if (incumbent == nullptr) return Partition(std::move(best), m);

  std::vector<int> polished = incumbent->assignment();
  LocalSearch(inst, goal, polished);
  const Key polished_key = KeyOf(inst.Loads(polished), goal);
  if (Improves(polished_key, best_key, goal)) {
    best = std::move(polished);
    best_key = polished_key;
  }
  const Key incumbent_key = KeyOf(inst.Loads(incumbent->assignment()), goal);
  if (!Improves(best_key, incumbent_key, goal)) return *incumbent;
  return Partition(std::move(best), m);
}

}  // namespace

std::vector<double> ModularBlockValues(const std::vector<ModularFunction>& fns,
                                       const Partition& partition) {
  const ModularInstance inst(fns, partition.num_blocks());
  if (partition.ground_size() != inst.n()) {
    throw std::invalid_argument("partition does not match the weights");
  }
  return inst.Loads(partition.assignment());
}

Partition ModularMaxMin(const std::vector<ModularFunction>& fns, int m,
                        const Partition* incumbent) {
  return Solve(fns, m, incumbent, Goal::kRaiseMin);
}

Partition ModularMinMax(const std::vector<ModularFunction>& fns, int m,
                        const Partition* incumbent) {
  return Solve(fns, m, incumbent, Goal::kLowerMax);
}

}  // namespace subpart
