#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <unordered_map>

namespace gamecrit {

// Bounded memo of game-state values. Once the capacity is reached, a
// random entry makes room for each new one; dropped values are merely
// recomputed, so eviction never affects results. The eviction RNG is
// seeded with a constant to keep runs reproducible.
template <typename Key, typename Value, typename Hash = std::hash<Key>>
class TranspositionTable {
 public:
  explicit TranspositionTable(std::size_t capacity) : capacity_(capacity) {}

  std::optional<Value> lookup(const Key& key) const {
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  void store(const Key& key, const Value& value) {
    if (capacity_ == 0) return;
    if (map_.size() >= capacity_) evict_one();
    map_.emplace(key, value);
  }

  std::size_t size() const { return map_.size(); }

 private:
  void evict_one() {
    std::size_t buckets = map_.bucket_count();
    std::uniform_int_distribution<std::size_t> pick(0, buckets - 1);
    for (;;) {
      std::size_t b = pick(rng_);
      auto it = map_.begin(b);
      if (it == map_.end(b)) continue;
      map_.erase(it->first);
      return;
    }
  }

  std::unordered_map<Key, Value, Hash> map_;
  std::size_t capacity_;
  std::mt19937_64 rng_{0x9e3779b97f4a7c15ULL};
};

}  // namespace gamecrit
