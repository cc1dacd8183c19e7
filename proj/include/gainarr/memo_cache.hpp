#pragma once

#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

namespace gainarr {

/// String-keyed memo table. Readers share a lock; insertion keeps the first
/// value stored under a key. When the table reaches `capacity` it is cleared
/// wholesale, which only costs recomputation.
template <class V>
class MemoCache {
 public:
  explicit MemoCache(std::size_t capacity = 1u << 21) : capacity_(capacity) {}

  std::optional<V> find(const std::string& key) const {
    std::shared_lock lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  void insert(std::string key, V value) {
    std::unique_lock lock(mu_);
    if (map_.size() >= capacity_) map_.clear();
    map_.emplace(std::move(key), std::move(value));
  }

  void clear() {
    std::unique_lock lock(mu_);
    map_.clear();
  }

  std::size_t size() const {
    std::shared_lock lock(mu_);
    return map_.size();
  }

 private:
  std::size_t capacity_;
  mutable std::shared_mutex mu_;
  std::unordered_map<std::string, V> map_;
};

}  // namespace gainarr
