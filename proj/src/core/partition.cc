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

#include "subpart/core/partition.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace subpart {

Partition::Partition(int ground_size, int num_blocks)
    : assignment_(ground_size, 0), num_blocks_(num_blocks) {
  if (num_blocks < 1) throw std::invalid_argument("num_blocks must be >= 1");
  if (ground_size < 0) throw std::invalid_argument("negative ground size");
}

Partition::Partition(std::vector<int> assignment, int num_blocks)
    : assignment_(std::move(assignment)), num_blocks_(num_blocks) {
  if (num_blocks < 1) throw std::invalid_argument("num_blocks must be >= 1");
  for (int b : assignment_) {
    if (b < 0 || b >= num_blocks) {
      throw std::invalid_argument("block id " + std::to_string(b) +
                                  " outside [0, " +
                                  std::to_string(num_blocks) + ")");
    }
  }
}

void Partition::Assign(int item, int block) {
  if (block < 0 || block >= num_blocks_) {
    throw std::invalid_argument("block id out of range");
  }
  assignment_.at(item) = block;
}

std::vector<ItemList> Partition::Blocks() const {
  std::vector<ItemList> blocks(num_blocks_);
  for (int item = 0; item < ground_size(); ++item) {
    blocks[assignment_[item]].push_back(item);
  }
  return blocks;
}

std::vector<int> Partition::BlockSizes() const {
  std::vector<int> sizes(num_blocks_, 0);
  for (int b : assignment_) ++sizes[b];
  return sizes;
}

Partition PartitionFromBlocks(const std::vector<ItemList>& blocks,
                              int ground_size) {
  if (blocks.empty()) throw std::invalid_argument("no blocks");
  std::vector<int> assignment(ground_size, -1);
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
    for (int item : blocks[b]) {
      if (item < 0 || item >= ground_size || assignment[item] != -1) {
        throw std::invalid_argument("blocks are not a partition");
      }
      assignment[item] = b;
    }
  }
  if (std::find(assignment.begin(), assignment.end(), -1) !=
      assignment.end()) {
    throw std::invalid_argument("blocks do not cover the ground set");
  }
  return Partition(std::move(assignment), static_cast<int>(blocks.size()));
}

std::string DirectionName(Direction direction) {
  return direction == Direction::kMaxMinAvg ? "max-min-avg" : "min-max-avg";
}

MixedObjectiveSpec::MixedObjectiveSpec(Direction direction, double lambda,
                                       std::vector<OraclePtr> oracles,
                                       int num_blocks)
    : direction_(direction),
      lambda_(lambda),
      oracles_(std::move(oracles)),
      num_blocks_(num_blocks) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument("lambda must lie in [0, 1]");
  }
  if (num_blocks < 1) throw std::invalid_argument("num_blocks must be >= 1");
  if (oracles_.empty()) throw std::invalid_argument("no oracles");
  if (oracles_.size() != 1 && static_cast<int>(oracles_.size()) != num_blocks) {
    throw std::invalid_argument(
        "expected one shared oracle or one oracle per block");
  }
  for (const auto& oracle : oracles_) {
    if (!oracle) throw std::invalid_argument("null oracle");
    if (oracle->ground_size() != oracles_.front()->ground_size()) {
      throw std::invalid_argument("oracles disagree on ground set size");
    }
  }
}

MixedObjectiveSpec MixedObjectiveSpec::Homogeneous(Direction direction,
                                                   double lambda,
                                                   OraclePtr oracle,
                                                   int num_blocks) {
  return MixedObjectiveSpec(direction, lambda, {std::move(oracle)},
                            num_blocks);
}

MixedObjectiveSpec MixedObjectiveSpec::WithLambda(double lambda) const {
  return MixedObjectiveSpec(direction_, lambda, oracles_, num_blocks_);
}

PartitionScore ScoreFromBlockValues(std::vector<double> block_values,
                                    Direction direction, double lambda) {
  PartitionScore score;
  score.block_values = std::move(block_values);
  const auto& v = score.block_values;
  score.worst = direction == Direction::kMaxMinAvg
                    ? *std::min_element(v.begin(), v.end())
                    : *std::max_element(v.begin(), v.end());
  score.average = std::accumulate(v.begin(), v.end(), 0.0) /
                  static_cast<double>(v.size());
  score.mixed = (1.0 - lambda) * score.worst + lambda * score.average;
  return score;
}

PartitionScore EvaluatePartition(const MixedObjectiveSpec& spec,
                                 const Partition& partition) {
  if (partition.num_blocks() != spec.num_blocks()) {
    throw std::invalid_argument("partition has " +
                                std::to_string(partition.num_blocks()) +
                                " blocks, spec expects " +
                                std::to_string(spec.num_blocks()));
  }
  if (partition.ground_size() != spec.ground_size()) {
    throw std::invalid_argument("partition covers " +
                                std::to_string(partition.ground_size()) +
                                " items, oracles expect " +
                                std::to_string(spec.ground_size()));
  }
  const auto blocks = partition.Blocks();
  std::vector<double> values(blocks.size());
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
    values[b] = spec.oracle(b).Evaluate(blocks[b]);
  }
  return ScoreFromBlockValues(std::move(values), spec.direction(),
                              spec.lambda());
}

}  // namespace subpart
