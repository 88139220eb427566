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

#include "subpart/bench/brute_force.h"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace subpart {
namespace {

class Enumerator {
 public:
  explicit Enumerator(const MixedObjectiveSpec& spec)
      : spec_(spec),
        n_(spec.ground_size()),
        m_(spec.num_blocks()),
        blocks_(m_),
        values_(m_, 0.0),
        assignment_(n_, 0) {}

  BruteForceResult Run() {
    Visit(0);
    return {Partition(best_assignment_, m_), best_value_};
  }

 private:
  // Items are placed in increasing order, so block lists stay sorted and
  // Evaluate() sees the same input EvaluatePartition would build.
  void Visit(int item) {
    if (item == n_) {
      const double value =
          ScoreFromBlockValues(values_, spec_.direction(), spec_.lambda())
              .mixed;
      if (!found_ || Better(spec_.direction(), value, best_value_)) {
        found_ = true;
        best_value_ = value;
        best_assignment_ = assignment_;
      }
      return;
    }
    for (int b = 0; b < m_; ++b) {
      blocks_[b].push_back(item);
      const double saved = values_[b];
      values_[b] = spec_.oracle(b).Evaluate(blocks_[b]);
      assignment_[item] = b;
      Visit(item + 1);
      values_[b] = saved;
      blocks_[b].pop_back();
    }
  }

  const MixedObjectiveSpec& spec_;
  int n_;
  int m_;
  std::vector<ItemList> blocks_;
  std::vector<double> values_;
  std::vector<int> assignment_;
  std::vector<int> best_assignment_;
  double best_value_ = 0.0;
  bool found_ = false;
};

}  // namespace

BruteForceResult BruteForceOpt(const MixedObjectiveSpec& spec,
                               std::uint64_t limit) {
  const int n = spec.ground_size();
  const int m = spec.num_blocks();
  std::uint64_t count = 1;
  bool over = false;
  for (int v = 0; v < n && !over; ++v) {
    if (count > limit / static_cast<std::uint64_t>(m)) {
      over = true;
    } else {
      count *= m;
    }
  }
  if (over || count > limit) {
    char buffer[160];
    std::snprintf(buffer, sizeof(buffer),
                  "brute force refused: m^n = %d^%d = %.6g assignments "
                  "exceeds the limit of %llu",
                  m, n, std::pow(static_cast<double>(m), n),
                  static_cast<unsigned long long>(limit));
    throw BruteForceRefused(buffer);
  }
  return Enumerator(spec).Run();
}

}  // namespace subpart
