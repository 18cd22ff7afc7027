#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>

namespace p2sd {

// Read-mostly cache shared across threads. Values are computed outside the
// lock; on a race the first inserted value wins, and since every cached
// function is pure both candidates are equal anyway.
template <class Key, class Value, class Compare = std::less<Key>>
class ConcurrentMemo {
 public:
  std::optional<Value> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  Value insert(const Key& key, Value value) {
    std::unique_lock lock(mutex_);
    auto [it, inserted] = table_.try_emplace(key, std::move(value));
    return it->second;
  }

  template <class Fn>
  Value get_or_compute(const Key& key, Fn&& compute) {
    if (auto hit = find(key)) return *std::move(hit);
    return insert(key, compute());
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, Value, Compare> table_;
};

}  // namespace p2sd
