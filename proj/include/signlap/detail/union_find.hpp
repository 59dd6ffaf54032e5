#pragma once

#include <numeric>
#include <utility>
#include <vector>

namespace signlap::detail {

// Union by size without path compression, so unions can be rolled back.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  // Returns false if already joined.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    ++unions_;
    return true;
  }

  // Undo the most recent successful unite().
  void rollback() {
    const int b = history_.back();
    history_.pop_back();
    const int a = parent_[b];
    size_[a] -= size_[b];
    parent_[b] = b;
    --unions_;
  }

  int components() const { return static_cast<int>(parent_.size()) - unions_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
  int unions_ = 0;
};

}  // namespace signlap::detail
