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

#include "subpart/core/semigradient.h"

#include <algorithm>
#include <stdexcept>

namespace subpart {

double ModularFunction::Evaluate(std::span<const int> items) const {
  CheckItems(items, static_cast<int>(weights.size()));
  std::vector<char> seen(weights.size(), 0);
  double total = offset;
  for (int item : items) {
    if (seen[item]) continue;
    seen[item] = 1;
    total += weights[item];
  }
  return total;
}

ModularFunction SingletonWeights(const SubmodularOracle& oracle) {
  const int n = oracle.ground_size();
  ModularFunction h;
  h.weights.resize(n);
  const auto empty = oracle.NewState();
  for (int j = 0; j < n; ++j) h.weights[j] = empty->Gain(j);
  return h;
}

std::vector<int> AnchorFirstOrder(int ground_size,
                                  std::span<const int> anchor) {
  CheckItems(anchor, ground_size);
  std::vector<char> in_anchor(ground_size, 0);
  for (int item : anchor) in_anchor[item] = 1;
  std::vector<int> order;
  order.reserve(ground_size);
  for (int j = 0; j < ground_size; ++j) {
    if (in_anchor[j]) order.push_back(j);
  }
  for (int j = 0; j < ground_size; ++j) {
    if (!in_anchor[j]) order.push_back(j);
  }
  return order;
}

std::vector<int> GreedyAnchorOrder(const SubmodularOracle& oracle,
                                   std::span<const int> anchor) {
  const int n = oracle.ground_size();
  CheckItems(anchor, n);
  std::vector<char> in_anchor(n, 0);
  for (int item : anchor) in_anchor[item] = 1;
  std::vector<int> pending;
  for (int j = 0; j < n; ++j) {
    if (in_anchor[j]) pending.push_back(j);
  }
  std::vector<int> order;
  order.reserve(n);
  auto state = oracle.NewState();
  while (!pending.empty()) {
    std::size_t best = 0;
    double best_gain = state->Gain(pending[0]);
    for (std::size_t k = 1; k < pending.size(); ++k) {
      const double gain = state->Gain(pending[k]);
      if (gain > best_gain) {
        best = k;
        best_gain = gain;
      }
    }
    order.push_back(pending[best]);
    state->Add(pending[best]);
    pending.erase(pending.begin() + best);
  }
  std::vector<std::pair<double, int>> rest;
  for (int j = 0; j < n; ++j) {
    if (!in_anchor[j]) rest.emplace_back(-state->Gain(j), j);
  }
  std::sort(rest.begin(), rest.end());
  for (const auto& [neg_gain, j] : rest) order.push_back(j);
  return order;
}

ModularFunction ModularLowerBound(const SubmodularOracle& oracle,
                                  std::span<const int> anchor,
                                  std::span<const int> sigma) {
  const int n = oracle.ground_size();
  if (static_cast<int>(sigma.size()) != n) {
    throw std::invalid_argument("sigma is not a permutation of the ground set");
  }
  std::vector<char> seen(n, 0);
  for (int item : sigma) {
    if (item < 0 || item >= n || seen[item]) {
      throw std::invalid_argument(
          "sigma is not a permutation of the ground set");
    }
    seen[item] = 1;
  }
  CheckItems(anchor, n);
  std::vector<char> in_anchor(n, 0);
  int anchor_size = 0;
  for (int item : anchor) {
    if (!in_anchor[item]) ++anchor_size;
    in_anchor[item] = 1;
  }
  for (int i = 0; i < n; ++i) {
    if ((i < anchor_size) != static_cast<bool>(in_anchor[sigma[i]])) {
      throw std::invalid_argument("anchor set is not a prefix of sigma");
    }
  }

  ModularFunction h;
  h.weights.assign(n, 0.0);
  auto state = oracle.NewState();
  double previous = 0.0;
  for (int item : sigma) {
    state->Add(item);
    const double current = state->Value();
    h.weights[item] = current - previous;
    previous = current;
  }
  return h;
}

ModularFunction ModularUpperBound(const SubmodularOracle& oracle,
                                  std::span<const int> anchor,
                                  UpperBoundVariant variant) {
  const int n = oracle.ground_size();
  CheckItems(anchor, n);
  std::vector<char> in_anchor(n, 0);
  ItemList members;
  for (int item : anchor) {
    if (!in_anchor[item]) members.push_back(item);
    in_anchor[item] = 1;
  }
  std::sort(members.begin(), members.end());

  const auto anchor_state = StateOf(oracle, members);
  const double anchor_value = anchor_state->Value();

  ModularFunction m;
  m.weights.assign(n, 0.0);

  // Weights for members: the gain lost when the member is removed.
  if (variant == UpperBoundVariant::kGrow) {
    // f(j | X - j), by rebuilding X without j.
    for (std::size_t k = 0; k < members.size(); ++k) {
      auto without = oracle.NewState();
      for (std::size_t l = 0; l < members.size(); ++l) {
        if (l != k) without->Add(members[l]);
      }
      m.weights[members[k]] = anchor_value - without->Value();
    }
  } else {
    // f(j | V - j).
    ItemList all(n);
    for (int j = 0; j < n; ++j) all[j] = j;
    const double full_value = StateOf(oracle, all)->Value();
    for (int j : members) {
      auto without = oracle.NewState();
      for (int l = 0; l < n; ++l) {
        if (l != j) without->Add(l);
      }
      m.weights[j] = full_value - without->Value();
    }
  }

  // Weights for non-members: the price of adding them.
  const auto empty = oracle.NewState();
  for (int j = 0; j < n; ++j) {
    if (in_anchor[j]) continue;
    m.weights[j] = variant == UpperBoundVariant::kGrow ? empty->Gain(j)
                                                       : anchor_state->Gain(j);
  }

  double member_weight = 0.0;
  for (int j : members) member_weight += m.weights[j];
  m.offset = anchor_value - member_weight;
  return m;
}

double Curvature(const SubmodularOracle& oracle, std::span<const int> anchor) {
  const int n = oracle.ground_size();
  CheckItems(anchor, n);
  std::vector<char> in_anchor(n, 0);
  ItemList members;
  for (int item : anchor) {
    if (!in_anchor[item]) members.push_back(item);
    in_anchor[item] = 1;
  }
  const auto anchor_state = StateOf(oracle, members);
  const double anchor_value = anchor_state->Value();
  const auto empty = oracle.NewState();

  double min_ratio = 1.0;
  bool any_positive = false;
  for (int v = 0; v < n; ++v) {
    const double singleton = empty->Gain(v);
    if (singleton <= 0.0) continue;
    any_positive = true;
    double context_gain;
    if (in_anchor[v]) {
      auto without = oracle.NewState();
      for (int item : members) {
        if (item != v) without->Add(item);
      }
      context_gain = anchor_value - without->Value();
    } else {
      context_gain = anchor_state->Gain(v);
    }
    min_ratio = std::min(min_ratio, context_gain / singleton);
  }
  if (!any_positive) {
    throw std::domain_error("curvature undefined: every singleton value is 0");
  }
  return std::clamp(1.0 - min_ratio, 0.0, 1.0);
}

}  // namespace subpart
