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

#include "subpart/robust/greedy.h"

#include <algorithm>
#include <memory>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

#include "subpart/core/rng.h"

namespace subpart {
namespace {

using StatePtr = std::unique_ptr<OracleState>;

void CheckBlockCount(int m) {
  if (m < 1) throw std::invalid_argument("number of blocks must be >= 1");
}

// Index of the smallest state value; lowest index on ties.
int ArgminBlock(const std::vector<StatePtr>& states) {
  int best = 0;
  for (int i = 1; i < static_cast<int>(states.size()); ++i) {
    if (states[i]->Value() < states[best]->Value()) best = i;
  }
  return best;
}

std::vector<StatePtr> EmptyStates(const std::vector<OraclePtr>& oracles,
                                  int m) {
  std::vector<StatePtr> states;
  states.reserve(m);
  for (int i = 0; i < m; ++i) states.push_back(BlockOracle(oracles, i).NewState());
  return states;
}

// Upper bound on the current gain of `item`. `stamp` is the size of the
// owning set when the bound was computed; a matching stamp means it is exact.
struct GainEntry {
  double bound;
  int block;
  int item;
  int stamp;
};

// Max-heap order: larger bound first, then lower block, then lower item.
struct GainEntryLess {
  bool operator()(const GainEntry& a, const GainEntry& b) const {
    if (a.bound != b.bound) return a.bound < b.bound;
    if (a.block != b.block) return a.block > b.block;
    return a.item > b.item;
  }
};

using GainHeap =
    std::priority_queue<GainEntry, std::vector<GainEntry>, GainEntryLess>;

double TruncatedGain(const OracleState& state, int item, double c) {
  const double value = state.Value();
  return std::min(value + state.Gain(item), c) - std::min(value, c);
}

}  // namespace

int CheckBlockOracles(const std::vector<OraclePtr>& oracles, int m) {
  CheckBlockCount(m);
  if (oracles.empty() || (oracles.size() != 1 &&
                          static_cast<int>(oracles.size()) != m)) {
    throw std::invalid_argument("expected 1 or " + std::to_string(m) +
                                " oracles, got " +
                                std::to_string(oracles.size()));
  }
  for (const auto& f : oracles) {
    if (f == nullptr) throw std::invalid_argument("null oracle");
    if (f->ground_size() != oracles.front()->ground_size()) {
      throw std::invalid_argument("oracles disagree on the ground set size");
    }
  }
  return oracles.front()->ground_size();
}

Partition GreedMax(const SubmodularOracle& f, int m, GreedyOptions options) {
  CheckBlockCount(m);
  const int n = f.ground_size();
  std::vector<StatePtr> states;
  for (int i = 0; i < m; ++i) states.push_back(f.NewState());
  Partition partition(n, m);
  std::vector<char> assigned(n, 0);

  std::vector<GainHeap> heaps;
  if (options.lazy) {
    GainHeap initial;
    for (int v = 0; v < n; ++v) initial.push({states[0]->Gain(v), 0, v, 0});
    heaps.assign(m, initial);
  }

  for (int step = 0; step < n; ++step) {
    const int j = ArgminBlock(states);
    OracleState& state = *states[j];
    int chosen = -1;
    if (options.lazy) {
      GainHeap& heap = heaps[j];
      while (chosen < 0) {
        GainEntry top = heap.top();
        heap.pop();
        if (assigned[top.item]) continue;
        if (top.stamp == state.size()) {
          chosen = top.item;
        } else {
          heap.push({state.Gain(top.item), 0, top.item, state.size()});
        }
      }
    } else {
      double best_gain = 0.0;
      for (int v = 0; v < n; ++v) {
        if (assigned[v]) continue;
        const double gain = state.Gain(v);
        if (chosen < 0 || gain > best_gain) {
          chosen = v;
          best_gain = gain;
        }
      }
    }
    assigned[chosen] = 1;
    state.Add(chosen);
    partition.Assign(chosen, j);
  }
  return partition;
}

Partition StreamGreed(const SubmodularOracle& f, int m,
                      std::span<const int> order) {
  CheckBlockCount(m);
  const int n = f.ground_size();
  if (static_cast<int>(order.size()) != n) {
    throw std::invalid_argument("order must list every item exactly once");
  }
  std::vector<char> seen(n, 0);
  for (int v : order) {
    if (v < 0 || v >= n || seen[v]) {
      throw std::invalid_argument("order must be a permutation of the items");
    }
    seen[v] = 1;
  }
  std::vector<StatePtr> states;
  for (int i = 0; i < m; ++i) states.push_back(f.NewState());
  Partition partition(n, m);
  for (int v : order) {
    const int j = ArgminBlock(states);
    states[j]->Add(v);
    partition.Assign(v, j);
  }
  return partition;
}

Partition GreedSwp(const std::vector<OraclePtr>& oracles, int m, double c,
                   GreedyOptions options) {
  const int n = CheckBlockOracles(oracles, m);
  if (!(c >= 0.0)) throw std::invalid_argument("truncation level must be >= 0");
  auto states = EmptyStates(oracles, m);
  Partition partition(n, m);
  std::vector<char> assigned(n, 0);

  if (options.lazy) {
    GainHeap heap;
    for (int i = 0; i < m; ++i) {
      for (int v = 0; v < n; ++v) {
        heap.push({TruncatedGain(*states[i], v, c), i, v, 0});
      }
    }
    for (int step = 0; step < n; ++step) {
      for (;;) {
        const GainEntry top = heap.top();
        heap.pop();
        if (assigned[top.item]) continue;
        OracleState& state = *states[top.block];
        if (top.stamp != state.size()) {
          heap.push({TruncatedGain(state, top.item, c), top.block, top.item,
                     state.size()});
          continue;
        }
        assigned[top.item] = 1;
        state.Add(top.item);
        partition.Assign(top.item, top.block);
        break;
      }
    }
    return partition;
  }

  for (int step = 0; step < n; ++step) {
    int best_block = -1;
    int best_item = -1;
    double best_gain = 0.0;
    for (int i = 0; i < m; ++i) {
      for (int v = 0; v < n; ++v) {
        if (assigned[v]) continue;
        const double gain = TruncatedGain(*states[i], v, c);
        if (best_block < 0 || gain > best_gain) {
          best_block = i;
          best_item = v;
          best_gain = gain;
        }
      }
    }
    assigned[best_item] = 1;
    states[best_block]->Add(best_item);
    partition.Assign(best_item, best_block);
  }
  return partition;
}

double TruncatedWelfare(const std::vector<OraclePtr>& oracles,
                        const Partition& partition, double c) {
  const int m = partition.num_blocks();
  CheckBlockOracles(oracles, m);
  const auto blocks = partition.Blocks();
  double total = 0.0;
  for (int i = 0; i < m; ++i) {
    total += std::min(BlockOracle(oracles, i).Evaluate(blocks[i]), c);
  }
  return total / m;
}

Partition GreedMin(const SubmodularOracle& f, int m, GreedMinOptions options) {
  CheckBlockCount(m);
  if (options.subsample && *options.subsample < 1) {
    throw std::invalid_argument("subsample size must be >= 1");
  }
  const int n = f.ground_size();
  std::vector<StatePtr> states;
  for (int i = 0; i < m; ++i) states.push_back(f.NewState());
  Partition partition(n, m);
  std::vector<int> remaining(n);
  std::iota(remaining.begin(), remaining.end(), 0);
  Rng rng(options.seed);

  while (!remaining.empty()) {
    const int j = ArgminBlock(states);
    const int size = static_cast<int>(remaining.size());
    int scan = size;
    if (options.subsample && *options.subsample < size) {
      // Partial Fisher-Yates: the first `scan` slots become the sample.
      scan = *options.subsample;
      for (int k = 0; k < scan; ++k) {
        const int pick = k + static_cast<int>(rng.UniformInt(size - k));
        std::swap(remaining[k], remaining[pick]);
      }
    }
    int best_slot = -1;
    double best_gain = 0.0;
    for (int k = 0; k < scan; ++k) {
      const double gain = states[j]->Gain(remaining[k]);
      if (best_slot < 0 || gain < best_gain ||
          (gain == best_gain && remaining[k] < remaining[best_slot])) {
        best_slot = k;
        best_gain = gain;
      }
    }
    const int item = remaining[best_slot];
    remaining[best_slot] = remaining.back();
    remaining.pop_back();
    states[j]->Add(item);
    partition.Assign(item, j);
  }
  return partition;
}

Partition BalancedRandomPartition(int n, int m, std::uint64_t seed) {
  CheckBlockCount(m);
  if (m > n) {
    throw std::invalid_argument("balanced partition needs m <= n");
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  rng.Shuffle(std::span<int>(order));
  std::vector<int> assignment(n);
  for (int k = 0; k < n; ++k) assignment[order[k]] = k % m;
  return Partition(std::move(assignment), m);
}

}  // namespace subpart
