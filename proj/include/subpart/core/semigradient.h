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

#ifndef SUBPART_CORE_SEMIGRADIENT_H_
#define SUBPART_CORE_SEMIGRADIENT_H_

#include <span>
#include <vector>

#include "subpart/core/oracle.h"

namespace subpart {

// Affine set function offset + sum_{j in A} weights[j]. Lower bounds built
// from chain differences have offset 0; the upper bounds below carry the
// constant f(X) - sum_{j in X} weights[j].
struct ModularFunction {
  std::vector<double> weights;
  double offset = 0.0;

  double Evaluate(std::span<const int> items) const;
  double operator()(std::span<const int> items) const {
    return Evaluate(items);
  }
};

// Weights f({j}) for every item.
ModularFunction SingletonWeights(const SubmodularOracle& oracle);

// Extreme point of the subdifferential at Y: h(sigma[i]) = f(S_i) - f(S_{i-1})
// along the chain defined by `sigma`, which must be a permutation of the
// ground set listing the members of Y first. h <= f everywhere, h(Y) = f(Y).
ModularFunction ModularLowerBound(const SubmodularOracle& oracle,
                                  std::span<const int> anchor,
                                  std::span<const int> sigma);

// Permutation listing `anchor` (ascending) followed by the rest (ascending).
std::vector<int> AnchorFirstOrder(int ground_size,
                                  std::span<const int> anchor);

// Permutation listing `anchor` in greedy order (largest gain given the
// members placed so far), then the remaining items by decreasing f(j | Y).
// Ties go to the lower id. Large outside gains come first and so keep most
// of their value in the resulting lower bound.
std::vector<int> GreedyAnchorOrder(const SubmodularOracle& oracle,
                                   std::span<const int> anchor);

enum class UpperBoundVariant {
  // m_{X,1}: removals priced at f(j | X - j), additions at f(j | {}).
  kGrow,
  // m_{X,2}: removals priced at f(j | V - j), additions at f(j | X).
  kShrink,
};

// Modular upper bound tight at X: m(Y) >= f(Y) for all Y, m(X) = f(X).
ModularFunction ModularUpperBound(const SubmodularOracle& oracle,
                                  std::span<const int> anchor,
                                  UpperBoundVariant variant);

// kappa_f(A) = 1 - min_v f(v | A - v) / f(v). For v outside A the context
// is A itself. Items with f({v}) = 0 are skipped; throws std::domain_error
// when every singleton is zero.
double Curvature(const SubmodularOracle& oracle, std::span<const int> anchor);

}  // namespace subpart

#endif  // SUBPART_CORE_SEMIGRADIENT_H_
