#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

namespace palgen {

// Union-find over 0..n-1 with union by size and path halving. Tracks the
// number of classes so callers can test "how many merges happened" in O(1).
class DisjointSet {
 public:
  DisjointSet() = default;
  explicit DisjointSet(std::size_t n) : parent_(n), size_(n, 1), classes_(n) {
    std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
  }

  std::size_t element_count() const noexcept { return parent_.size(); }
  std::size_t class_count() const noexcept { return classes_; }

  std::uint32_t find(std::uint32_t x) noexcept {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns true if x and y were in different classes.
  bool unite(std::uint32_t x, std::uint32_t y) noexcept {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (size_[x] < size_[y]) std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
    --classes_;
    return true;
  }

  bool same(std::uint32_t x, std::uint32_t y) noexcept { return find(x) == find(y); }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
  std::size_t classes_ = 0;
};

}  // namespace palgen
