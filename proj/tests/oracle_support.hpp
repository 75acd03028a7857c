#pragma once

// Independent brute-force oracle for the tests. Recomputes orbit structure
// straight from face words and pairings with its own algorithms (endpoint
// flooding rather than the library's dart permutations), so library results
// can be checked against it rather than against themselves.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "pif/scheme.hpp"
#include "pif/surface_map.hpp"

namespace oracle {

struct Side {
  std::string label;
  bool positive;
};

struct RawScheme {
  std::vector<std::string> face_names;
  std::vector<std::vector<Side>> words;
  std::vector<std::tuple<int, int, int>> pairings;  // (face index a, face index b, offset)
};

inline RawScheme raw_of(const pif::Polyhedron& p) {
  RawScheme r;
  for (const auto& fw : p.ball().faces()) {
    r.face_names.push_back(fw.name);
    std::vector<Side> w;
    for (const auto& sl : fw.word) w.push_back({sl.label, sl.positive});
    r.words.push_back(std::move(w));
  }
  auto index = [&](const std::string& n) {
    return static_cast<int>(std::find(r.face_names.begin(), r.face_names.end(), n) - r.face_names.begin());
  };
  for (const auto& pr : p.pairings()) r.pairings.push_back({index(pr.face_a), index(pr.face_b), pr.offset});
  return r;
}

// --- sphere vertices: equivalence of edge endpoints through corners ---

// endpoint id: (label, end) with end 0 the origin of the positive direction
inline std::map<std::pair<std::string, int>, int> endpoint_groups(const RawScheme& r, int* group_count) {
  std::map<std::pair<std::string, int>, int> id;
  auto get = [&](const std::string& l, int e) {
    auto key = std::make_pair(l, e);
    auto it = id.find(key);
    if (it == id.end()) it = id.emplace(key, static_cast<int>(id.size())).first;
    return it->second;
  };
  // collect all endpoints first
  for (const auto& w : r.words)
    for (const auto& s : w) {
      get(s.label, 0);
      get(s.label, 1);
    }
  std::vector<int> parent(id.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  for (const auto& w : r.words) {
    int m = static_cast<int>(w.size());
    for (int j = 0; j < m; ++j) {
      const Side& prev = w[(j + m - 1) % m];
      const Side& next = w[j];
      int head_of_prev = get(prev.label, prev.positive ? 1 : 0);
      int tail_of_next = get(next.label, next.positive ? 0 : 1);
      unite(head_of_prev, tail_of_next);
    }
  }
  std::map<int, int> group_of_root;
  std::map<std::pair<std::string, int>, int> out;
  for (const auto& [key, i] : id) {
    int root = find(i);
    auto it = group_of_root.find(root);
    if (it == group_of_root.end()) it = group_of_root.emplace(root, static_cast<int>(group_of_root.size())).first;
    out[key] = it->second;
  }
  *group_count = static_cast<int>(group_of_root.size());
  return out;
}

inline int vertex_count(const RawScheme& r) {
  int n = 0;
  endpoint_groups(r, &n);
  return n;
}

inline int edge_count(const RawScheme& r) {
  std::set<std::string> labels;
  for (const auto& w : r.words)
    for (const auto& s : w) labels.insert(s.label);
  return static_cast<int>(labels.size());
}

// --- edge classes from the pairings alone ---

inline std::vector<int> edge_cycle_sizes(const RawScheme& r) {
  std::map<std::string, int> id;
  for (const auto& w : r.words)
    for (const auto& s : w)
      if (!id.count(s.label)) id[s.label] = static_cast<int>(id.size());
  std::vector<int> parent(id.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto [a, b, k] : r.pairings) {
    int m = static_cast<int>(r.words[a].size());
    for (int j = 0; j < m; ++j) {
      int t = ((k - j) % m + m) % m;
      parent[find(id[r.words[a][j].label])] = find(id[r.words[b][t].label]);
    }
  }
  std::map<int, int> size_of;
  for (const auto& [l, i] : id) ++size_of[find(i)];
  std::vector<int> out;
  for (const auto& [root, n] : size_of) out.push_back(n);
  std::sort(out.begin(), out.end());
  return out;
}

// --- vertex classes via the corner map ---

inline std::vector<int> vertex_order_sizes(const RawScheme& r) {
  int nv = 0;
  auto groups = endpoint_groups(r, &nv);
  auto vertex_of_corner = [&](int f, int j) {
    int m = static_cast<int>(r.words[f].size());
    const Side& prev = r.words[f][(j + m - 1) % m];
    return groups.at({prev.label, prev.positive ? 1 : 0});
  };
  std::vector<int> parent(nv);
  for (int i = 0; i < nv; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto [a, b, k] : r.pairings) {
    int m = static_cast<int>(r.words[a].size());
    for (int j = 0; j < m; ++j) {
      int j2 = ((k - j + 1) % m + m) % m;
      parent[find(vertex_of_corner(a, j))] = find(vertex_of_corner(b, j2));
    }
  }
  std::map<int, int> size_of;
  for (int v = 0; v < nv; ++v) ++size_of[find(v)];
  std::vector<int> out;
  for (const auto& [root, n] : size_of) out.push_back(n);
  std::sort(out.begin(), out.end());
  return out;
}

inline int chi_quotient(const RawScheme& r) {
  int vq = static_cast<int>(vertex_order_sizes(r).size());
  int eq = static_cast<int>(edge_cycle_sizes(r).size());
  int fq = static_cast<int>(r.pairings.size());
  return vq - eq + fq - 1;
}

// ball-level isomorphism through seed propagation, for round-trip checks
inline bool balls_isomorphic(const pif::CellDividedBall& a, const pif::CellDividedBall& b) {
  if (a.dart_count() != b.dart_count()) return false;
  for (int mirror = 0; mirror < 2; ++mirror)
    for (int d = 0; d < b.dart_count(); ++d)
      if (a.extend_dart_map(b, 0, d, mirror != 0)) return true;
  return false;
}

}  // namespace oracle
