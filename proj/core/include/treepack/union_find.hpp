#pragma once

#include <utility>
#include <vector>

namespace treepack {

/// Disjoint sets over 0..n-1 with union by size and path halving.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), size_(n, 1), components_(n) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Returns false when both elements were already in the same set.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --components_;
    return true;
  }

  bool same(int a, int b) { return find(a) == find(b); }
  int components() const { return components_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int components_;
};

/// Union by size without path compression, so merges undo in LIFO order.
/// Used by the backtracking decomposition enumerator.
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(int n) : parent_(n), size_(n, 1), components_(n) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }

  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  bool same(int a, int b) const { return find(a) == find(b); }

  /// Every call pushes one history entry, merging or not, so undo() is
  /// always the exact inverse of the most recent unite().
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      history_.emplace_back(-1, -1);
      return false;
    }
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --components_;
    history_.emplace_back(b, a);
    return true;
  }

  void undo() {
    auto [child, root] = history_.back();
    history_.pop_back();
    if (child >= 0) {
      parent_[child] = child;
      size_[root] -= size_[child];
      ++components_;
    }
  }

  int components() const { return components_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int components_;
  std::vector<std::pair<int, int>> history_;
};

}  // namespace treepack
