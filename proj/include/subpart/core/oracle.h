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

#ifndef SUBPART_CORE_ORACLE_H_
#define SUBPART_CORE_ORACLE_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

namespace subpart {

// Items of the ground set are identified by indices in [0, n).
using ItemList = std::vector<int>;

// Incrementally grown set together with its function value. Concrete
// functions keep whatever sufficient statistics make Gain() cheap (per-item
// coverage maxima for facility location, key counts for set cover, ...).
//
// Add() of a member is a no-op and Gain() of a member is 0, so callers may
// treat the state as a set without tracking membership themselves.
class OracleState {
 public:
  explicit OracleState(int ground_size) : members_(ground_size, 0) {}
  virtual ~OracleState() = default;

  virtual double Value() const = 0;
  virtual std::unique_ptr<OracleState> Clone() const = 0;

  double Gain(int item) const { return members_[item] ? 0.0 : DoGain(item); }
  void Add(int item) {
    if (members_[item]) return;
    members_[item] = 1;
    ++size_;
    DoAdd(item);
  }
  bool Contains(int item) const { return members_[item] != 0; }
  int size() const { return size_; }
  int ground_size() const { return static_cast<int>(members_.size()); }

 protected:
  virtual double DoGain(int item) const = 0;
  virtual void DoAdd(int item) = 0;

 private:
  std::vector<char> members_;
  int size_ = 0;
};

// A normalized monotone submodular set function over {0, ..., n-1}.
//
// Implementations are immutable after construction; Evaluate(), Gain() and
// NewState() may be called concurrently.
class SubmodularOracle {
 public:
  virtual ~SubmodularOracle() = default;

  virtual int ground_size() const = 0;
  virtual std::unique_ptr<OracleState> NewState() const = 0;

  // Value of the set listed in `items`. Duplicates are ignored.
  virtual double Evaluate(std::span<const int> items) const;

  // f(item | items) = f(items + item) - f(items).
  virtual double Gain(int item, std::span<const int> items) const;
};

using OraclePtr = std::shared_ptr<const SubmodularOracle>;

// Wraps an arbitrary set function given as a callable. The state recomputes
// the callable on every query, so this is meant for tests and small inputs.
class FunctionOracle : public SubmodularOracle {
 public:
  using SetFunction = std::function<double(std::span<const int>)>;

  FunctionOracle(int ground_size, SetFunction fn);

  int ground_size() const override { return ground_size_; }
  std::unique_ptr<OracleState> NewState() const override;
  double Evaluate(std::span<const int> items) const override;

 private:
  int ground_size_;
  SetFunction fn_;
};

// Caches Evaluate() results keyed on the membership bitmap of the set.
// Safe for concurrent use; the cache is guarded by a mutex.
class MemoizedOracle : public SubmodularOracle {
 public:
  explicit MemoizedOracle(OraclePtr inner);

  int ground_size() const override { return inner_->ground_size(); }
  std::unique_ptr<OracleState> NewState() const override;
  double Evaluate(std::span<const int> items) const override;

  std::size_t cache_size() const;
  std::size_t hits() const;

 private:
  struct BitmapHash {
    std::size_t operator()(const std::vector<std::uint64_t>& bits) const;
  };

  OraclePtr inner_;
  mutable std::mutex mu_;
  mutable std::unordered_map<std::vector<std::uint64_t>, double, BitmapHash>
      cache_;
  mutable std::size_t hits_ = 0;
};

// Builds a state holding `items`.
std::unique_ptr<OracleState> StateOf(const SubmodularOracle& oracle,
                                     std::span<const int> items);

// Throws std::invalid_argument unless every id lies in [0, n).
void CheckItems(std::span<const int> items, int ground_size);

}  // namespace subpart

#endif  // SUBPART_CORE_ORACLE_H_
