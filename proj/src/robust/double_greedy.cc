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

#include "subpart/robust/double_greedy.h"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "subpart/core/rng.h"

namespace subpart {
namespace {

class SplitValue {
 public:
  SplitValue(const SubmodularOracle& f1, const SubmodularOracle& f2)
      : f1_(f1), f2_(f2), n_(f1.ground_size()) {}

  // g(A) for the indicator `in_a`.
  double operator()(const std::vector<char>& in_a) const {
    std::vector<int> a, rest;
    for (int v = 0; v < n_; ++v) (in_a[v] ? a : rest).push_back(v);
    return std::min(f1_.Evaluate(a), f2_.Evaluate(rest));
  }

 private:
  const SubmodularOracle& f1_;
  const SubmodularOracle& f2_;
  int n_;
};

}  // namespace

Partition DoubleGreedySfa2(const SubmodularOracle& f1,
                           const SubmodularOracle& f2, std::uint64_t seed) {
  const int n = f1.ground_size();
  if (f2.ground_size() != n) {
    throw std::invalid_argument("oracles disagree on the ground set size");
  }
  const SplitValue g(f1, f2);
  Rng rng(seed);
  std::vector<char> x(n, 0);  // grows from the empty set
  std::vector<char> y(n, 1);  // shrinks from V
  double gx = g(x);
  double gy = g(y);
  for (int v = 0; v < n; ++v) {
    x[v] = 1;
    const double gx_add = g(x);
    x[v] = 0;
    y[v] = 0;
    const double gy_drop = g(y);
    y[v] = 1;
    const double a = std::max(gx_add - gx, 0.0);
    const double b = std::max(gy_drop - gy, 0.0);
    const double p = a + b > 0.0 ? a / (a + b) : 1.0;
    if (rng.Uniform() < p) {
      x[v] = 1;
      gx = gx_add;
    } else {
      y[v] = 0;
      gy = gy_drop;
    }
  }
  std::vector<int> assignment(n);
  for (int v = 0; v < n; ++v) assignment[v] = x[v] ? 0 : 1;
  return Partition(std::move(assignment), 2);
}

}  // namespace subpart
