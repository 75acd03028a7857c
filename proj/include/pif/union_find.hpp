#pragma once

#include <numeric>
#include <vector>

namespace pif {

// Small disjoint-set forest used for orbit computations.
class UnionFind {
public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) const {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);  // keep the smallest element as root
    parent_[b] = a;
    return true;
  }

  bool same(int a, int b) const { return find(a) == find(b); }

  // Groups sorted by their smallest element; members ascending.
  std::vector<std::vector<int>> groups() const {
    std::vector<std::vector<int>> by_root(parent_.size());
    for (int i = 0; i < static_cast<int>(parent_.size()); ++i) by_root[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& g : by_root)
      if (!g.empty()) out.push_back(std::move(g));
    return out;
  }

private:
  mutable std::vector<int> parent_;
};

// Disjoint sets with a relative sign (Z/2 weight) per element. unite(a,b,s)
// records sign(a)*sign(b) = s; returns false on a parity conflict.
class SignedUnionFind {
public:
  explicit SignedUnionFind(int n) : parent_(n), sign_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::pair<int, int> find(int x) const {  // (root, sign relative to root)
    int s = 1;
    while (parent_[x] != x) {
      s *= sign_[x];
      x = parent_[x];
    }
    return {x, s};
  }

  bool unite(int a, int b, int rel) {
    auto [ra, sa] = find(a);
    auto [rb, sb] = find(b);
    if (ra == rb) return sa * sb == rel;
    if (rb < ra) {
      std::swap(ra, rb);
      std::swap(sa, sb);
    }
    parent_[rb] = ra;
    sign_[rb] = sa * rel * sb;
    return true;
  }

private:
  mutable std::vector<int> parent_;
  std::vector<int> sign_;
};

}  // namespace pif
