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

#ifndef SUBPART_CORE_PARTITION_H_
#define SUBPART_CORE_PARTITION_H_

#include <string>
#include <vector>

#include "subpart/core/oracle.h"

namespace subpart {

// Ordered m-way partition of {0, ..., n-1} stored as an assignment vector.
// Covering and disjoint by construction; blocks may be empty.
class Partition {
 public:
  Partition() = default;
  // All items in block 0.
  Partition(int ground_size, int num_blocks);
  Partition(std::vector<int> assignment, int num_blocks);

  int ground_size() const { return static_cast<int>(assignment_.size()); }
  int num_blocks() const { return num_blocks_; }
  const std::vector<int>& assignment() const { return assignment_; }

  int block_of(int item) const { return assignment_[item]; }
  void Assign(int item, int block);

  // Sorted member lists, one per block.
  std::vector<ItemList> Blocks() const;
  std::vector<int> BlockSizes() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> assignment_;
  int num_blocks_ = 0;
};

// Builds a partition from explicit blocks; every item must appear once.
Partition PartitionFromBlocks(const std::vector<ItemList>& blocks,
                              int ground_size);

enum class Direction {
  kMaxMinAvg,  // maximize (1-lambda) min_i f_i + lambda avg_i f_i
  kMinMaxAvg,  // minimize (1-lambda) max_i f_i + lambda avg_i f_i
};

std::string DirectionName(Direction direction);

// Problem instance for the mixed robust/average objective. A single oracle
// marks the homogeneous setting (every block valued by the same function).
class MixedObjectiveSpec {
 public:
  MixedObjectiveSpec(Direction direction, double lambda,
                     std::vector<OraclePtr> oracles, int num_blocks);

  // Homogeneous convenience constructor.
  static MixedObjectiveSpec Homogeneous(Direction direction, double lambda,
                                        OraclePtr oracle, int num_blocks);

  Direction direction() const { return direction_; }
  double lambda() const { return lambda_; }
  double lambda_bar() const { return 1.0 - lambda_; }
  int num_blocks() const { return num_blocks_; }
  int ground_size() const { return oracles_.front()->ground_size(); }
  bool homogeneous() const { return oracles_.size() == 1; }

  const SubmodularOracle& oracle(int block) const {
    return *oracles_[homogeneous() ? 0 : block];
  }
  const OraclePtr& oracle_ptr(int block) const {
    return oracles_[homogeneous() ? 0 : block];
  }
  const std::vector<OraclePtr>& oracles() const { return oracles_; }

  MixedObjectiveSpec WithLambda(double lambda) const;

 private:
  Direction direction_;
  double lambda_;
  std::vector<OraclePtr> oracles_;
  int num_blocks_;
};

struct PartitionScore {
  std::vector<double> block_values;
  double worst = 0.0;    // min (MaxMinAvg) or max (MinMaxAvg) block value
  double average = 0.0;
  double mixed = 0.0;    // (1-lambda) worst + lambda average
};

// Combines per-block values into a score for the given direction and lambda.
PartitionScore ScoreFromBlockValues(std::vector<double> block_values,
                                    Direction direction, double lambda);

PartitionScore EvaluatePartition(const MixedObjectiveSpec& spec,
                                 const Partition& partition);

// True when `a` is strictly better than `b` in the given direction.
inline bool Better(Direction direction, double a, double b) {
  return direction == Direction::kMaxMinAvg ? a > b : a < b;
}

}  // namespace subpart

#endif  // SUBPART_CORE_PARTITION_H_
