#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pif/errors.hpp"
#include "pif/moves.hpp"
#include "pif/scheme.hpp"
#include "pif/snf.hpp"
#include "pif/union_find.hpp"

namespace pif {

// --- the scar CW complex ---

struct ScarFaceCell {
  int pairing = 0;                            // index into polyhedron.pairings()
  std::vector<std::pair<int, int>> boundary;  // (edge class, +1/-1) along face_a's word
};

struct ScarComplex {
  EdgeClassification edges;
  VertexClassification vertices;
  std::vector<ScarFaceCell> face_cells;
  std::vector<std::pair<int, int>> edge_endpoints;  // per edge class: (tail, head) vertex class

  int vq() const { return static_cast<int>(vertices.classes.size()); }
  int eq() const { return static_cast<int>(edges.classes.size()); }
  int fq() const { return static_cast<int>(face_cells.size()); }
  int chi() const { return vq() - eq() + fq(); }
};

// One face cell per pairing, one edge cell per edge class, one vertex cell
// per vertex class. Checks that the two faces of every pairing project to
// opposite boundary words (this is the cancellation that makes the 3-cell
// boundary vanish).
inline ScarComplex scar_complex(const Polyhedron& p) {
  ScarComplex s;
  s.edges = p.edge_classes();
  s.vertices = p.vertex_classes();
  const CellDividedBall& ball = p.ball();

  auto project = [&](const SignedLabel& sl) {
    int c = s.edges.class_of.at(sl.label);
    int sign = (sl.positive ? 1 : -1) * s.edges.parity_of.at(sl.label);
    return std::pair{c, sign};
  };

  for (int i = 0; i < static_cast<int>(p.pairings().size()); ++i) {
    const FacePairing& pr = p.pairings()[i];
    int fa = ball.face_index(pr.face_a);
    int fb = ball.face_index(pr.face_b);
    int m = ball.face_sides(fa);
    ScarFaceCell cell{i, {}};
    for (int j = 0; j < m; ++j) cell.boundary.push_back(project(ball.face(fa).word[j]));
    for (int j = 0; j < m; ++j) {
      auto img = project(ball.face(fb).word[((pr.offset - j) % m + m) % m]);
      if (img.first != cell.boundary[j].first || img.second != -cell.boundary[j].second)
        throw InternalConsistencyError("pairing " + pr.face_a + "/" + pr.face_b +
                                       " does not project to opposite boundary words");
    }
    s.face_cells.push_back(std::move(cell));
  }

  for (const auto& c : s.edges.classes) {
    const Label& rep = c.labels.front();
    if (s.edges.parity_of.at(rep) != 1)
      throw InternalConsistencyError("edge class representative has parity -1");
    s.edge_endpoints.push_back({s.vertices.class_of[ball.label_tail_vertex(rep)],
                                s.vertices.class_of[ball.label_head_vertex(rep)]});
  }
  return s;
}

inline int chi_quotient(const Polyhedron& p) {
  ScarComplex s = scar_complex(p);
  return s.chi() - 1;  // one 3-cell
}

inline int chi_scar(const Polyhedron& p) { return scar_complex(p).chi(); }

// --- edge-end orbits (used by vertex links) ---

// Ends of edges: end 2i is the origin of label i's positive direction,
// end 2i+1 its terminus. The scheme glues tail(d) to head(side_map(d)).
struct EdgeEndOrbits {
  std::vector<Label> labels;            // sorted; end ids derive from this order
  std::vector<int> orbit_of;            // end id -> orbit id
  std::vector<std::vector<int>> orbits; // orbit id -> end ids
  std::vector<int> end_vertex;          // end id -> ball vertex
  std::vector<int> orbit_edge_class;    // orbit id -> edge class index
};

inline EdgeEndOrbits edge_end_orbits(const Polyhedron& p, const EdgeClassification& ec) {
  const CellDividedBall& ball = p.ball();
  EdgeEndOrbits out;
  out.labels = ball.labels();
  std::map<Label, int> idx;
  for (int i = 0; i < static_cast<int>(out.labels.size()); ++i) idx[out.labels[i]] = i;

  auto tail_end = [&](int d) {
    const auto& sl = ball.dart_signed_label(d);
    return 2 * idx[sl.label] + (sl.positive ? 0 : 1);
  };
  auto head_end = [&](int d) {
    const auto& sl = ball.dart_signed_label(d);
    return 2 * idx[sl.label] + (sl.positive ? 1 : 0);
  };

  UnionFind uf(2 * static_cast<int>(out.labels.size()));
  for (int d = 0; d < ball.dart_count(); ++d) {
    uf.unite(tail_end(d), head_end(p.side_map(d)));
    uf.unite(head_end(d), tail_end(p.side_map(d)));
  }

  out.end_vertex.resize(2 * out.labels.size());
  for (int i = 0; i < static_cast<int>(out.labels.size()); ++i) {
    out.end_vertex[2 * i] = ball.label_tail_vertex(out.labels[i]);
    out.end_vertex[2 * i + 1] = ball.label_head_vertex(out.labels[i]);
  }

  out.orbit_of.assign(2 * out.labels.size(), -1);
  for (const auto& g : uf.groups()) {
    int oid = static_cast<int>(out.orbits.size());
    for (int e : g) out.orbit_of[e] = oid;
    int cls = ec.class_of.at(out.labels[g.front() / 2]);
    for (int e : g)
      if (ec.class_of.at(out.labels[e / 2]) != cls)
        throw InternalConsistencyError("edge-end orbit spans several edge classes");
    out.orbit_edge_class.push_back(cls);
    out.orbits.push_back(g);
  }
  return out;
}

// --- vertex links ---

enum class LinkGraphKind { Circle, Banana, CompleteK4, Other };

struct LinkSurface {
  int points = 0;
  int arcs = 0;
  int disks = 0;
  int chi = 0;
  int genus = 0;
  LinkGraphKind kind = LinkGraphKind::Other;
  int banana_arcs = 0;                            // n for Banana (the theta graph is Banana(3))
  std::vector<std::pair<int, int>> graph_edges;   // arcs between local node ids
  std::vector<int> node_edge_class;               // local node -> edge class index
};

namespace detail {

struct LinkGraphShape {
  LinkGraphKind kind;
  int banana_arcs;
};

inline LinkGraphShape classify_link_graph(int nodes, std::vector<std::pair<int, int>> edges) {
  auto degree = [&](int n) {
    int d = 0;
    for (auto [u, v] : edges) {
      if (u == n) ++d;
      if (v == n) ++d;
    }
    return d;
  };

  bool all_two = true;
  for (int n = 0; n < nodes; ++n)
    if (degree(n) != 2) all_two = false;
  if (all_two) return {LinkGraphKind::Circle, 0};

  // suppress degree-2 nodes (topological smoothing of the 1-complex)
  std::vector<bool> gone(nodes, false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int n = 0; n < nodes && !changed; ++n) {
      if (gone[n] || degree(n) != 2) continue;
      int e1 = -1, e2 = -1;
      for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        if (edges[i].first == n || edges[i].second == n) {
          if (e1 == -1)
            e1 = i;
          else
            e2 = i;
        }
      }
      if (e2 == -1) continue;  // a loop at n; cannot smooth
      int u = (edges[e1].first == n) ? edges[e1].second : edges[e1].first;
      int v = (edges[e2].first == n) ? edges[e2].second : edges[e2].first;
      edges.erase(edges.begin() + e2);
      edges.erase(edges.begin() + e1);
      edges.push_back({u, v});
      gone[n] = true;
      changed = true;
    }
  }

  std::set<int> live;
  for (auto [u, v] : edges) {
    live.insert(u);
    live.insert(v);
  }
  if (live.size() == 2) {
    int a = *live.begin(), b = *live.rbegin();
    bool parallel = std::all_of(edges.begin(), edges.end(), [&](const std::pair<int, int>& e) {
      return (e.first == a && e.second == b) || (e.first == b && e.second == a);
    });
    // n = 2 cannot reach this point (its nodes would have been suppressed),
    // so any parallel family is a banana, including the single-arc one that
    // sits inside a cycle-1 edge
    if (parallel && !edges.empty()) return {LinkGraphKind::Banana, static_cast<int>(edges.size())};
  }
  if (live.size() == 4 && edges.size() == 6) {
    std::set<std::pair<int, int>> simple;
    bool complete = true;
    for (auto [u, v] : edges) {
      if (u == v) complete = false;
      auto key = std::minmax(u, v);
      if (!simple.insert(key).second) complete = false;
    }
    if (complete && simple.size() == 6) return {LinkGraphKind::CompleteK4, 0};
  }
  return {LinkGraphKind::Other, 0};
}

}  // namespace detail

// The closed surface whose cone is a neighborhood of the quotient vertex:
// one disk per class member, one arc per corner (glued in pairs by the
// corner map), arc endpoints glued along edge-end orbits.
inline LinkSurface vertex_link(const Polyhedron& p, int vertex_class_index) {
  const CellDividedBall& ball = p.ball();
  auto ec = p.edge_classes();
  auto vc = p.vertex_classes();
  if (vertex_class_index < 0 || vertex_class_index >= static_cast<int>(vc.classes.size()))
    throw UnknownVertexError("vertex class index out of range");
  const auto& members = vc.classes[vertex_class_index].vertices;
  std::set<int> member_set(members.begin(), members.end());

  EdgeEndOrbits ends = edge_end_orbits(p, ec);

  // points: edge-end orbits located at the class
  std::map<int, int> node_of_orbit;
  LinkSurface link;
  for (int o = 0; o < static_cast<int>(ends.orbits.size()); ++o) {
    bool here = member_set.count(ends.end_vertex[ends.orbits[o].front()]);
    for (int e : ends.orbits[o]) {
      if (member_set.count(ends.end_vertex[e]) != (here ? 1u : 0u))
        throw InternalConsistencyError("edge-end orbit crosses vertex classes");
    }
    if (here) {
      node_of_orbit[o] = static_cast<int>(node_of_orbit.size());
      link.node_edge_class.push_back(ends.orbit_edge_class[o]);
    }
  }

  std::map<Label, int> label_idx;
  for (int i = 0; i < static_cast<int>(ends.labels.size()); ++i) label_idx[ends.labels[i]] = i;
  auto end_orbit_of_dart = [&](int d, bool head) {
    const auto& sl = ball.dart_signed_label(d);
    int e = 2 * label_idx[sl.label] + ((sl.positive == head) ? 1 : 0);
    return ends.orbit_of[e];
  };

  // arcs: one per glued corner pair at the class
  for (const auto& pr : p.pairings()) {
    int fa = ball.face_index(pr.face_a);
    int m = ball.face_sides(fa);
    for (int j = 0; j < m; ++j) {
      if (!member_set.count(ball.vertex_of_corner(fa, j))) continue;
      auto [fb, j2] = p.corner_map(fa, j);
      if (!member_set.count(ball.vertex_of_corner(fb, j2)))
        throw InternalConsistencyError("corner map leaves the vertex class");
      int in_dart = ball.dart_id(fa, (j + m - 1) % m);
      int out_dart = ball.dart_id(fa, j);
      int u = node_of_orbit.at(end_orbit_of_dart(in_dart, true));
      int v = node_of_orbit.at(end_orbit_of_dart(out_dart, false));
      link.graph_edges.push_back({u, v});
    }
  }

  link.points = static_cast<int>(node_of_orbit.size());
  link.arcs = static_cast<int>(link.graph_edges.size());
  link.disks = static_cast<int>(members.size());
  {
    int degree_sum = 0;
    for (int v : members) degree_sum += ball.vertex_degree(v);
    if (degree_sum != 2 * link.arcs)
      throw InternalConsistencyError("link arcs do not pair up the class corners");
  }
  link.chi = link.points - link.arcs + link.disks;
  if (link.chi % 2 != 0) throw InternalConsistencyError("vertex link has odd Euler characteristic");
  link.genus = (2 - link.chi) / 2;
  if (link.genus < 0) throw InternalConsistencyError("vertex link has negative genus");

  auto shape = detail::classify_link_graph(link.points, link.graph_edges);
  link.kind = shape.kind;
  link.banana_arcs = shape.banana_arcs;
  return link;
}

inline std::vector<LinkSurface> vertex_links(const Polyhedron& p) {
  std::vector<LinkSurface> out;
  int n = static_cast<int>(p.vertex_classes().classes.size());
  for (int i = 0; i < n; ++i) out.push_back(vertex_link(p, i));
  return out;
}

// --- manifold recognition ---

struct ManifoldReport {
  bool manifold = false;
  std::vector<int> singular_classes;  // vertex class indices with genus > 0
  std::vector<int> link_genera;       // per vertex class
};

// A quotient is a manifold exactly when every vertex-class link is a sphere;
// the chi_quotient = sum of genera identity cross-checks the orbit code.
inline ManifoldReport is_manifold(const Polyhedron& p) {
  ManifoldReport rep;
  auto links = vertex_links(p);
  int genus_sum = 0;
  for (int i = 0; i < static_cast<int>(links.size()); ++i) {
    rep.link_genera.push_back(links[i].genus);
    genus_sum += links[i].genus;
    if (links[i].genus > 0) rep.singular_classes.push_back(i);
  }
  rep.manifold = rep.singular_classes.empty();
  int chi_q = chi_quotient(p);
  if (chi_q != genus_sum)
    throw InternalConsistencyError("chi_quotient (" + std::to_string(chi_q) + ") != sum of link genera (" +
                                   std::to_string(genus_sum) + ")");
  if (rep.manifold != (chi_q == 0))
    throw InternalConsistencyError("link criterion and Euler characteristic disagree on manifoldness");
  return rep;
}

// --- homology of the produced space ---

struct HomologyResult {
  std::array<int, 4> betti{};
  std::vector<long long> torsion;     // invariant factors of H1 that exceed 1
  std::vector<long long> torsion_h2;  // expected empty (d3 = 0 for these complexes)
};

inline HomologyResult homology(const Polyhedron& p) {
  ScarComplex s = scar_complex(p);  // construction verifies the d3 cancellation

  IntMatrix d1(s.vq(), std::vector<Integer>(s.eq(), 0));
  for (int e = 0; e < s.eq(); ++e) {
    auto [tail, head] = s.edge_endpoints[e];
    d1[head][e] += 1;
    d1[tail][e] -= 1;
  }
  IntMatrix d2(s.eq(), std::vector<Integer>(s.fq(), 0));
  for (int f = 0; f < s.fq(); ++f)
    for (auto [cls, sign] : s.face_cells[f].boundary) d2[cls][f] += sign;

  // boundary-of-boundary must vanish
  for (int f = 0; f < s.fq(); ++f) {
    std::map<int, Integer> total;
    for (int e = 0; e < s.eq(); ++e) {
      if (d2[e][f] == 0) continue;
      auto [tail, head] = s.edge_endpoints[e];
      total[head] += d2[e][f];
      total[tail] -= d2[e][f];
    }
    for (auto& [v, x] : total)
      if (x != 0) throw InternalConsistencyError("d1 . d2 != 0 on face cell " + std::to_string(f));
  }

  SmithResult s1 = smith_normal_form(d1);
  SmithResult s2 = smith_normal_form(d2);

  HomologyResult h;
  h.betti[0] = s.vq() - s1.rank;
  h.betti[1] = (s.eq() - s1.rank) - s2.rank;
  h.betti[2] = s.fq() - s2.rank;  // d3 = 0
  h.betti[3] = 1;                 // the single 3-cell is a cycle
  if (h.betti[0] != 1) throw InternalConsistencyError("quotient space is not connected (b0 != 1)");
  for (const Integer& x : s2.invariant_factors)
    if (x > 1) h.torsion.push_back(x.convert_to<long long>());
  return h;
}

// --- local models and components ---

enum class LocalModelKind { Disk, HalfDisks, SpecialVertex, Other };

struct LocalModel {
  LocalModelKind kind = LocalModelKind::Other;
  int n = 0;  // sheet count for HalfDisks (HalfDisks(3) is the triple line)

  bool operator==(const LocalModel&) const = default;
};

struct CellRef {
  int dim = 0;
  int index = 0;
  friend auto operator<=>(const CellRef&, const CellRef&) = default;
};

// Models for every scar cell: faces and cycle-2 edges are disk points,
// cycle-n edges are n half disks, vertices classify by their link graph.
struct ScarModels {
  std::vector<LocalModel> face_models;
  std::vector<LocalModel> edge_models;
  std::vector<LocalModel> vertex_models;
  std::vector<LinkSurface> links;

  const LocalModel& of(CellRef c) const {
    switch (c.dim) {
      case 2: return face_models.at(c.index);
      case 1: return edge_models.at(c.index);
      default: return vertex_models.at(c.index);
    }
  }
};

inline ScarModels scar_models(const Polyhedron& p) {
  ScarModels out;
  ScarComplex s = scar_complex(p);
  out.face_models.assign(s.fq(), {LocalModelKind::Disk, 0});
  for (const auto& c : s.edges.classes) {
    if (c.cycle() == 2)
      out.edge_models.push_back({LocalModelKind::Disk, 0});
    else
      out.edge_models.push_back({LocalModelKind::HalfDisks, c.cycle()});
  }
  out.links = vertex_links(p);
  for (const auto& link : out.links) {
    if (link.genus > 0) {
      out.vertex_models.push_back({LocalModelKind::Other, 0});
    } else if (link.kind == LinkGraphKind::Circle) {
      out.vertex_models.push_back({LocalModelKind::Disk, 0});
    } else if (link.kind == LinkGraphKind::Banana) {
      out.vertex_models.push_back({LocalModelKind::HalfDisks, link.banana_arcs});
    } else if (link.kind == LinkGraphKind::CompleteK4) {
      out.vertex_models.push_back({LocalModelKind::SpecialVertex, 0});
    } else {
      out.vertex_models.push_back({LocalModelKind::Other, 0});
    }
  }
  return out;
}

inline LocalModel local_model(const Polyhedron& p, CellRef cell) { return scar_models(p).of(cell); }

struct Component {
  int dim = 0;
  std::vector<CellRef> cells;  // sorted
  int face_cells = 0, edge_cells = 0, vertex_cells = 0;
};

struct ComponentsResult {
  std::vector<Component> components;  // deterministic order
  int count(int dim) const {
    int n = 0;
    for (const auto& c : components) n += (c.dim == dim);
    return n;
  }
  // every i-component an open i-cell: 2-components single face cells,
  // 1-components open arcs (not circles), 0-components points
  bool all_open_cells() const {
    for (const auto& c : components) {
      if (c.dim == 2 && (c.face_cells != 1 || c.edge_cells + c.vertex_cells != 0)) return false;
      if (c.dim == 1 && c.vertex_cells != c.edge_cells - 1) return false;
    }
    return true;
  }
};

// Merges disk-model cells into 2-components and chains of cycle-n edges
// through banana vertices into 1-components; remaining vertices stand alone.
inline ComponentsResult components(const Polyhedron& p) {
  const CellDividedBall& ball = p.ball();
  ScarComplex s = scar_complex(p);
  ScarModels models = scar_models(p);

  const int nf = s.fq(), ne = s.eq(), nv = s.vq();
  auto fid = [&](int i) { return i; };
  auto eid = [&](int i) { return nf + i; };
  auto vid = [&](int i) { return nf + ne + i; };
  UnionFind uf(nf + ne + nv);

  // adjacency: edge class -> face cells via the darts of its labels
  auto face_cells_of_edge = [&](int cls) {
    std::set<int> out;
    for (const Label& l : s.edges.classes[cls].labels)
      for (int d : ball.label_darts(l)) out.insert(p.pairing_index_of(ball.dart_face(d)));
    return out;
  };
  auto face_cells_of_vertex = [&](int cls) {
    std::set<int> out;
    for (int v : s.vertices.classes[cls].vertices)
      for (int d : ball.vertex_darts(v)) out.insert(p.pairing_index_of(ball.dart_face(d)));
    return out;
  };

  for (int e = 0; e < ne; ++e) {
    if (models.edge_models[e].kind != LocalModelKind::Disk) continue;
    for (int f : face_cells_of_edge(e)) uf.unite(eid(e), fid(f));
  }
  for (int v = 0; v < nv; ++v) {
    const LocalModel& m = models.vertex_models[v];
    if (m.kind == LocalModelKind::Disk) {
      for (int f : face_cells_of_vertex(v)) uf.unite(vid(v), fid(f));
    } else if (m.kind == LocalModelKind::HalfDisks) {
      // interior point of a 1-component: merge with the edge cells through
      // it, i.e. the classes of the link graph's branch nodes (degree-2
      // nodes are cycle-2 edge ends that already live in a 2-component)
      const LinkSurface& link = models.links[v];
      std::vector<int> degree(link.points, 0);
      for (auto [a, b] : link.graph_edges) {
        ++degree[a];
        ++degree[b];
      }
      for (int n = 0; n < link.points; ++n) {
        if (degree[n] == 2) continue;
        int cls = link.node_edge_class[n];
        if (s.edges.classes[cls].cycle() != m.n)
          throw InternalConsistencyError("banana vertex meets an edge of a different cycle");
        uf.unite(vid(v), eid(cls));
      }
    }
  }

  std::map<int, Component> by_root;
  auto add = [&](int root, CellRef ref) {
    Component& c = by_root[root];
    c.cells.push_back(ref);
    if (ref.dim == 2) ++c.face_cells;
    if (ref.dim == 1) ++c.edge_cells;
    if (ref.dim == 0) ++c.vertex_cells;
  };
  for (int f = 0; f < nf; ++f) add(uf.find(fid(f)), {2, f});
  for (int e = 0; e < ne; ++e) add(uf.find(eid(e)), {1, e});
  for (int v = 0; v < nv; ++v) add(uf.find(vid(v)), {0, v});

  ComponentsResult out;
  for (auto& [root, comp] : by_root) {
    std::sort(comp.cells.begin(), comp.cells.end());
    comp.dim = comp.face_cells ? 2 : (comp.edge_cells ? 1 : 0);
    if (comp.dim == 1 && comp.vertex_cells != comp.edge_cells && comp.vertex_cells != comp.edge_cells - 1)
      throw InternalConsistencyError("1-component is neither an open arc nor a circle");
    out.components.push_back(std::move(comp));
  }
  return out;
}

// --- the spine predicates ---

// Lemma-style sufficient conditions: every edge of cycle 2 or 3, every
// vertex class of order <= 4, every vertex adjacent to exactly three ends of
// cycle-3 edges.
inline bool simple_polyhedron_conditions(const Polyhedron& p) {
  auto ec = p.edge_classes();
  for (const auto& c : ec.classes)
    if (c.cycle() != 2 && c.cycle() != 3) return false;
  for (const auto& c : p.vertex_classes().classes)
    if (c.order() > 4) return false;
  for (int v = 0; v < p.ball().vertex_count(); ++v) {
    int cyc3_ends = 0;
    for (int d : p.ball().vertex_darts(v))
      if (ec.classes[ec.class_of.at(p.ball().dart_signed_label(d).label)].cycle() == 3) ++cyc3_ends;
    if (cyc3_ends != 3) return false;
  }
  return true;
}

// Every point's neighborhood is a disk, a triple of half disks, or the
// special-vertex cone.
inline bool is_simple(const Polyhedron& p) {
  ScarModels m = scar_models(p);
  auto allowed = [](const LocalModel& lm) {
    return lm.kind == LocalModelKind::Disk || (lm.kind == LocalModelKind::HalfDisks && lm.n == 3) ||
           lm.kind == LocalModelKind::SpecialVertex;
  };
  bool simple = true;
  for (const auto& v : {m.face_models, m.edge_models, m.vertex_models})
    for (const auto& lm : v)
      if (!allowed(lm)) simple = false;
  if (!simple && simple_polyhedron_conditions(p))
    throw InternalConsistencyError("polyhedron satisfies the simplicity conditions but a scar cell has a bad model");
  return simple;
}

// Every i-component of the scar is an open i-cell. Decided on the minimum
// polyhedron: reaching one with no cycle-2 classes leaves only single-face
// 2-components, so what remains is that no 1-component closes into a circle.
inline bool is_cellular(const Polyhedron& p) {
  MinimizeResult mr = minimize(p);
  if (mr.outcome != MinimizeResult::Outcome::Minimum) return false;
  auto ec = mr.result.edge_classes();
  for (const auto& c : ec.classes)
    if (c.cycle() == 2) throw InternalConsistencyError("minimize returned a Minimum with a cycle-2 class");
  ComponentsResult comp = components(mr.result);
  for (const auto& c : comp.components)
    if (c.dim == 2 && (c.face_cells != 1 || c.edge_cells + c.vertex_cells != 0))
      throw InternalConsistencyError("minimum polyhedron has a merged 2-component");
  return comp.all_open_cells();
}

// Simple and cellular; coincides with distinguishedness of the minimum.
inline bool is_special(const Polyhedron& p) {
  bool special = is_simple(p) && is_cellular(p);
  MinimizeResult mr = minimize(p);
  if (mr.outcome == MinimizeResult::Outcome::Minimum) {
    bool dist = is_distinguished(mr.result);
    if (dist != special)
      throw InternalConsistencyError("is_special disagrees with is_distinguished(minimize)");
  }
  return special;
}

}  // namespace pif
