#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "envycut/errors.hpp"

namespace envycut {

/// Oracle-function model wrapper: answers are memoized per key, so repeated
/// queries return identical values and only distinct keys are counted.
///
/// Queries are serialized by an internal mutex; counts are exact regardless
/// of which threads issue them.
template <typename Key, typename Value, typename Hash = std::hash<Key>>
class CountingOracle {
 public:
  using Function = std::function<Value(const Key&)>;

  explicit CountingOracle(Function inner) : inner_(std::move(inner)) {}

  CountingOracle(const CountingOracle&) = delete;
  CountingOracle& operator=(const CountingOracle&) = delete;

  Value query(const Key& key) {
    std::lock_guard lock(mutex_);
    ++total_calls_;
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    if (deadline_ && std::chrono::steady_clock::now() > *deadline_) throw Timeout("oracle deadline exceeded");
    Value v = inner_(key);
    cache_.emplace(key, v);
    return v;
  }

  bool contains(const Key& key) const {
    std::lock_guard lock(mutex_);
    return cache_.count(key) != 0;
  }

  /// Number of distinct keys queried so far; never decreases.
  std::uint64_t distinct_queries() const {
    std::lock_guard lock(mutex_);
    return cache_.size();
  }

  /// Number of query() calls, including cache hits.
  std::uint64_t total_calls() const {
    std::lock_guard lock(mutex_);
    return total_calls_;
  }

  void set_deadline(std::optional<std::chrono::steady_clock::time_point> deadline) {
    std::lock_guard lock(mutex_);
    deadline_ = deadline;
  }

  /// Evaluates the wrapped function without recording a query.
  Value peek(const Key& key) const { return inner_(key); }

 private:
  Function inner_;
  mutable std::mutex mutex_;
  std::unordered_map<Key, Value, Hash> cache_;
  std::uint64_t total_calls_ = 0;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
};

}  // namespace envycut
