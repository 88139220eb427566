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

#include "subpart/mixed/general_greed_min.h"

#include <memory>
#include <numeric>
#include <queue>
#include <optional>
#include <stdexcept>
#include <string>

#include "subpart/core/rng.h"

namespace subpart {
namespace {

// Slack on the phase test so that (1 - lambda) * n landing just below an
// integer through rounding does not end phase 1 one step early.
constexpr double kPhaseSlack = 1e-9;

void CheckArguments(int n, int m) {
  if (m < 1) throw std::invalid_argument("number of blocks must be >= 1");
  if (m > n) {
    throw std::invalid_argument("need m <= n, got m=" + std::to_string(m) +
                                " and n=" + std::to_string(n));
  }
}

struct SeedEntry {
  double bound;
  int item;
  int stamp;
};

struct SeedEntryLess {
  bool operator()(const SeedEntry& a, const SeedEntry& b) const {
    if (a.bound != b.bound) return a.bound < b.bound;
    return a.item > b.item;
  }
};

// Moves a uniform sample of `size` entries to the front of `remaining` and
// returns how many leading entries to scan.
int SampleFront(std::vector<int>& remaining, const std::optional<int>& size,
                Rng& rng) {
  const int count = static_cast<int>(remaining.size());
  if (!size || *size >= count) return count;
  for (int k = 0; k < *size; ++k) {
    const int pick = k + static_cast<int>(rng.UniformInt(count - k));
    std::swap(remaining[k], remaining[pick]);
  }
  return *size;
}

}  // namespace

std::vector<int> SeedSelect(const SubmodularOracle& f, int m) {
  const int n = f.ground_size();
  CheckArguments(n, m);
  auto state = f.NewState();
  std::priority_queue<SeedEntry, std::vector<SeedEntry>, SeedEntryLess> heap;
  for (int v = 0; v < n; ++v) heap.push({state->Gain(v), v, 0});
  std::vector<int> seeds;
  while (static_cast<int>(seeds.size()) < m) {
    const SeedEntry top = heap.top();
    heap.pop();
    if (top.stamp != state->size()) {
      heap.push({state->Gain(top.item), top.item, state->size()});
      continue;
    }
    state->Add(top.item);
    seeds.push_back(top.item);
  }
  return seeds;
}

GeneralGreedMinResult GeneralGreedMinDetailed(
    const SubmodularOracle& f, int m, double lambda,
    const GeneralGreedMinOptions& options) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument("lambda must lie in [0, 1]");
  }
  if (options.subsample && *options.subsample < 1) {
    throw std::invalid_argument("subsample size must be >= 1");
  }
  const int n = f.ground_size();
  CheckArguments(n, m);

  GeneralGreedMinResult result;
  result.seeds = SeedSelect(f, m);
  result.partition = Partition(n, m);
  std::vector<std::unique_ptr<OracleState>> states;
  std::vector<char> seeded(n, 0);
  for (int i = 0; i < m; ++i) {
    states.push_back(f.NewState());
    states[i]->Add(result.seeds[i]);
    result.partition.Assign(result.seeds[i], i);
    seeded[result.seeds[i]] = 1;
  }
  std::vector<int> remaining;
  for (int v = 0; v < n; ++v) {
    if (!seeded[v]) remaining.push_back(v);
  }

  Rng rng(options.seed);
  const double phase1_limit = (1.0 - lambda) * n + kPhaseSlack;
  for (int k = m; !remaining.empty(); ++k) {
    const int scan = SampleFront(remaining, options.subsample, rng);
    int best_block = -1;
    int best_slot = -1;
    double best_gain = 0.0;
    auto consider = [&](int block) {
      for (int s = 0; s < scan; ++s) {
        const double gain = states[block]->Gain(remaining[s]);
        if (best_slot < 0 || gain < best_gain ||
            (gain == best_gain && block == best_block &&
             remaining[s] < remaining[best_slot])) {
          best_block = block;
          best_slot = s;
          best_gain = gain;
        }
      }
    };
    if (k <= phase1_limit) {
      int lowest = 0;
      for (int i = 1; i < m; ++i) {
        if (states[i]->Value() < states[lowest]->Value()) lowest = i;
      }
      consider(lowest);
      ++result.phase1_steps;
    } else {
      for (int i = 0; i < m; ++i) consider(i);
      ++result.phase2_steps;
    }
    const int item = remaining[best_slot];
    remaining[best_slot] = remaining.back();
    remaining.pop_back();
    states[best_block]->Add(item);
    result.partition.Assign(item, best_block);
  }
  return result;
}

}  // namespace subpart
