#pragma once

#include <numeric>
#include <vector>

namespace spanlab {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0), sets_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t x, std::size_t y) {
    std::size_t px = find(x);
    std::size_t py = find(y);
    if (px == py) return false;
    if (rank_[px] < rank_[py]) std::swap(px, py);
    parent_[py] = px;
    if (rank_[px] == rank_[py]) ++rank_[px];
    --sets_;
    return true;
  }

  std::size_t sets() const { return sets_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<int> rank_;
  std::size_t sets_;
};

}  // namespace spanlab
