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

#include "subpart/core/oracle.h"

#include <stdexcept>
#include <string>
#include <utility>

namespace subpart {
namespace {

// State for FunctionOracle: keeps the member list and re-evaluates.
class ListState : public OracleState {
 public:
  ListState(int n, const FunctionOracle::SetFunction* fn)
      : OracleState(n), fn_(fn) {}

  double Value() const override { return value_; }
  std::unique_ptr<OracleState> Clone() const override {
    return std::make_unique<ListState>(*this);
  }

 protected:
  double DoGain(int item) const override {
    ItemList extended = items_;
    extended.push_back(item);
    return (*fn_)(extended) - value_;
  }
  void DoAdd(int item) override {
    items_.push_back(item);
    value_ = (*fn_)(items_);
  }

 private:
  const FunctionOracle::SetFunction* fn_;
  ItemList items_;
  double value_ = 0.0;
};

}  // namespace

void CheckItems(std::span<const int> items, int ground_size) {
  for (int item : items) {
    if (item < 0 || item >= ground_size) {
      throw std::invalid_argument("item id " + std::to_string(item) +
                                  " outside ground set of size " +
                                  std::to_string(ground_size));
    }
  }
}

std::unique_ptr<OracleState> StateOf(const SubmodularOracle& oracle,
                                     std::span<const int> items) {
  CheckItems(items, oracle.ground_size());
  auto state = oracle.NewState();
  for (int item : items) state->Add(item);
  return state;
}

double SubmodularOracle::Evaluate(std::span<const int> items) const {
  return StateOf(*this, items)->Value();
}

double SubmodularOracle::Gain(int item, std::span<const int> items) const {
  CheckItems(std::span<const int>(&item, 1), ground_size());
  return StateOf(*this, items)->Gain(item);
}

FunctionOracle::FunctionOracle(int ground_size, SetFunction fn)
    : ground_size_(ground_size), fn_(std::move(fn)) {
  if (ground_size < 1) {
    throw std::invalid_argument("ground set must be non-empty");
  }
}

std::unique_ptr<OracleState> FunctionOracle::NewState() const {
  return std::make_unique<ListState>(ground_size_, &fn_);
}

double FunctionOracle::Evaluate(std::span<const int> items) const {
  CheckItems(items, ground_size_);
  // Deduplicate so the callable always sees a set.
  std::vector<char> seen(ground_size_, 0);
  ItemList unique;
  unique.reserve(items.size());
  for (int item : items) {
    if (!seen[item]) {
      seen[item] = 1;
      unique.push_back(item);
    }
  }
  return fn_(unique);
}

namespace {

class MemoState : public OracleState {
 public:
  explicit MemoState(const MemoizedOracle* oracle)
      : OracleState(oracle->ground_size()), oracle_(oracle) {}

  double Value() const override { return value_; }
  std::unique_ptr<OracleState> Clone() const override {
    return std::make_unique<MemoState>(*this);
  }

 protected:
  double DoGain(int item) const override {
    ItemList extended = items_;
    extended.push_back(item);
    return oracle_->Evaluate(extended) - value_;
  }
  void DoAdd(int item) override {
    items_.push_back(item);
    value_ = oracle_->Evaluate(items_);
  }

 private:
  const MemoizedOracle* oracle_;
  ItemList items_;
  double value_ = 0.0;
};

}  // namespace

MemoizedOracle::MemoizedOracle(OraclePtr inner) : inner_(std::move(inner)) {
  if (!inner_) throw std::invalid_argument("null oracle");
}

std::size_t MemoizedOracle::BitmapHash::operator()(
    const std::vector<std::uint64_t>& bits) const {
  // FNV-1a over the words.
  std::uint64_t h = 1469598103934665603ULL;
  for (std::uint64_t w : bits) {
    h ^= w;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::unique_ptr<OracleState> MemoizedOracle::NewState() const {
  return std::make_unique<MemoState>(this);
}

double MemoizedOracle::Evaluate(std::span<const int> items) const {
  const int n = ground_size();
  CheckItems(items, n);
  std::vector<std::uint64_t> key((n + 63) / 64, 0);
  for (int item : items) key[item / 64] |= std::uint64_t{1} << (item % 64);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) {
      ++hits_;
      return it->second;
    }
  }
  const double value = inner_->Evaluate(items);
  std::lock_guard<std::mutex> lock(mu_);
  cache_.emplace(std::move(key), value);
  return value;
}

std::size_t MemoizedOracle::cache_size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.size();
}

std::size_t MemoizedOracle::hits() const {
  std::lock_guard<std::mutex> lock(mu_);
  return hits_;
}

}  // namespace subpart
