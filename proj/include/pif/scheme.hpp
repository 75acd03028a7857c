#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pif/errors.hpp"
#include "pif/surface_map.hpp"
#include "pif/union_find.hpp"

namespace pif {

// Identification of two faces with equal side counts. Side j of face_a maps
// to side (offset - j) mod m of face_b, with traversal direction reversed;
// the same formula read from face_b gives the inverse, so one offset serves
// both directions.
struct FacePairing {
  FaceName face_a;
  FaceName face_b;
  int offset = 0;
};

struct EdgeClass {
  std::vector<Label> labels;  // sorted
  int cycle() const { return static_cast<int>(labels.size()); }
};

struct VertexClass {
  std::vector<int> vertices;  // ball vertex ids, sorted
  int order() const { return static_cast<int>(vertices.size()); }
};

struct EdgeClassification {
  std::vector<EdgeClass> classes;        // sorted by smallest label
  std::map<Label, int> class_of;         // label -> class index
  std::map<Label, int> parity_of;        // orientation relative to the class representative (+1/-1)
};

struct VertexClassification {
  std::vector<VertexClass> classes;  // sorted by smallest vertex id
  std::vector<int> class_of;         // ball vertex id -> class index
};

inline bool is_involution(const std::vector<int>& m) {
  for (int d = 0; d < static_cast<int>(m.size()); ++d) {
    if (m[d] < 0 || m[d] >= static_cast<int>(m.size()) || m[m[d]] != d) return false;
  }
  return true;
}

// A cell-divided ball together with an identification scheme: a perfect
// matching of the faces by orientation-reversing pairings. Immutable.
class Polyhedron {
public:
  Polyhedron(CellDividedBall ball, std::vector<FacePairing> pairings, std::string name = "")
      : ball_(std::move(ball)), name_(std::move(name)) {
    // normalize: face_a is the smaller name, list sorted by face_a
    for (auto& p : pairings) {
      if (p.face_a > p.face_b) std::swap(p.face_a, p.face_b);
    }
    std::sort(pairings.begin(), pairings.end(),
              [](const FacePairing& x, const FacePairing& y) { return x.face_a < y.face_a; });
    pairings_ = std::move(pairings);

    std::set<FaceName> seen;
    for (const auto& p : pairings_) {
      if (p.face_a == p.face_b) throw PairingError("face " + p.face_a + " is paired with itself");
      int fa = ball_.face_index(p.face_a);
      int fb = ball_.face_index(p.face_b);
      if (ball_.face_sides(fa) != ball_.face_sides(fb))
        throw PairingError("paired faces " + p.face_a + ", " + p.face_b + " have different side counts");
      if (p.offset < 0 || p.offset >= ball_.face_sides(fa))
        throw PairingError("pairing " + p.face_a + "/" + p.face_b + ": offset " + std::to_string(p.offset) +
                           " out of range 0.." + std::to_string(ball_.face_sides(fa) - 1));
      for (const auto& f : {p.face_a, p.face_b}) {
        if (!seen.insert(f).second) throw PairingError("face " + f + " appears in more than one pairing");
      }
    }
    if (static_cast<int>(seen.size()) != ball_.face_count())
      throw PairingError("pairings do not cover every face (" + std::to_string(seen.size()) + " of " +
                         std::to_string(ball_.face_count()) + ")");

    pairing_of_face_.assign(ball_.face_count(), -1);
    for (int i = 0; i < static_cast<int>(pairings_.size()); ++i) {
      pairing_of_face_[ball_.face_index(pairings_[i].face_a)] = i;
      pairing_of_face_[ball_.face_index(pairings_[i].face_b)] = i;
    }

    sigma_.resize(ball_.dart_count());
    for (int d = 0; d < ball_.dart_count(); ++d) sigma_[d] = side_image(d);
    if (!is_involution(sigma_)) throw InternalConsistencyError("side map is not an involution");
  }

  const CellDividedBall& ball() const { return ball_; }
  const std::vector<FacePairing>& pairings() const { return pairings_; }
  const std::string& name() const { return name_; }
  Polyhedron renamed(std::string name) const {
    Polyhedron copy = *this;
    copy.name_ = std::move(name);
    return copy;
  }

  const FacePairing& pairing_of(const FaceName& face) const {
    return pairings_[pairing_of_face_[ball_.face_index(face)]];
  }
  int pairing_index_of(int face_idx) const { return pairing_of_face_[face_idx]; }

  // --- the side and corner maps ---

  int side_map(int dart) const { return sigma_[dart]; }
  const std::vector<int>& side_map_table() const { return sigma_; }

  // corner c_j precedes side j; (face, j) -> (partner, (offset - j + 1) mod m)
  std::pair<int, int> corner_map(int face_idx, int corner) const {
    const FacePairing& p = pairings_[pairing_of_face_[face_idx]];
    int fa = ball_.face_index(p.face_a);
    int fb = ball_.face_index(p.face_b);
    int m = ball_.face_sides(fa);
    int other = (face_idx == fa) ? fb : fa;
    return {other, ((p.offset - corner + 1) % m + m) % m};
  }

  // --- orbit classes ---

  EdgeClassification edge_classes() const {
    std::vector<Label> labels = ball_.labels();
    std::map<Label, int> idx;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) idx[labels[i]] = i;

    SignedUnionFind uf(static_cast<int>(labels.size()));
    for (int d = 0; d < ball_.dart_count(); ++d) {
      const auto& a = ball_.dart_signed_label(d);
      const auto& b = ball_.dart_signed_label(sigma_[d]);
      // Forward traversal of a side matches backward traversal of its image,
      // so the relative orientation of the two edges is -sign(a)*sign(b).
      int rel = -(a.positive ? 1 : -1) * (b.positive ? 1 : -1);
      if (!uf.unite(idx[a.label], idx[b.label], rel))
        throw InternalConsistencyError("edge orbit has inconsistent orientation (label " + a.label + ")");
    }

    EdgeClassification out;
    std::map<int, int> root_to_class;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
      auto [root, sign] = uf.find(i);
      auto it = root_to_class.find(root);
      if (it == root_to_class.end()) {
        it = root_to_class.emplace(root, static_cast<int>(out.classes.size())).first;
        out.classes.push_back({});
      }
      out.classes[it->second].labels.push_back(labels[i]);
      out.class_of[labels[i]] = it->second;
      out.parity_of[labels[i]] = sign;
    }
    return out;  // labels ascend within classes and classes sort by first label
  }

  VertexClassification vertex_classes() const {
    UnionFind uf(ball_.vertex_count());
    for (const auto& p : pairings_) {
      int fa = ball_.face_index(p.face_a);
      int m = ball_.face_sides(fa);
      for (int j = 0; j < m; ++j) {
        auto [fb, j2] = corner_map(fa, j);
        uf.unite(ball_.vertex_of_corner(fa, j), ball_.vertex_of_corner(fb, j2));
      }
    }
    VertexClassification out;
    out.class_of.assign(ball_.vertex_count(), -1);
    for (const auto& g : uf.groups()) {
      int ci = static_cast<int>(out.classes.size());
      out.classes.push_back({g});
      for (int v : g) out.class_of[v] = ci;
    }
    return out;
  }

  // --- standard form ---

  // A vertex class is needless when every member has degree 2 and no edge
  // joins two members.
  std::vector<VertexClass> needless_classes() const {
    std::vector<VertexClass> out;
    for (const auto& c : vertex_classes().classes) {
      bool all_deg2 = std::all_of(c.vertices.begin(), c.vertices.end(),
                                  [&](int v) { return ball_.vertex_degree(v) == 2; });
      if (!all_deg2) continue;
      std::set<int> members(c.vertices.begin(), c.vertices.end());
      bool internal_edge = false;
      for (const auto& l : ball_.labels()) {
        if (members.count(ball_.label_tail_vertex(l)) && members.count(ball_.label_head_vertex(l))) {
          internal_edge = true;
          break;
        }
      }
      if (!internal_edge) out.push_back(c);
    }
    return out;
  }

  bool is_standard() const { return needless_classes().empty(); }

  // Removes needless vertex classes one class at a time until none is left,
  // re-deriving pairing offsets from the shortened boundary words after each
  // smoothing. Idempotent.
  Polyhedron standard_form() const {
    Polyhedron p = *this;
    while (true) {
      auto needless = p.needless_classes();
      if (needless.empty()) return p;
      std::set<int> vs(needless.front().vertices.begin(), needless.front().vertices.end());
      auto rebuilt = p.ball_.merge_at_corners(vs);
      auto new_pairings = p.rederive_offsets(rebuilt);
      p = Polyhedron(CellDividedBall::build(std::move(rebuilt.faces)), std::move(new_pairings), p.name_);
    }
  }

  // --- isomorphism ---

  // Deterministic encoding, minimal over all root darts and both global
  // orientations. Equal encodings <=> isomorphic as unlabeled structures.
  std::vector<int> canonical_form() const {
    if (!is_standard()) throw NotStandardError("canonical_form requires a standard polyhedron");
    return canonical_code();
  }

  // Encoding without the standardness gate (internal/testing use).
  std::vector<int> canonical_code() const {
    std::vector<int> best;
    for (int mirror = 0; mirror < 2; ++mirror) {
      for (int root = 0; root < ball_.dart_count(); ++root) {
        std::vector<int> code = encode_from(root, mirror != 0);
        if (best.empty() || code < best) best = std::move(code);
      }
    }
    return best;
  }

  Polyhedron mirrored() const {
    std::vector<FacePairing> ps;
    for (const auto& p : pairings_) {
      int m = ball_.face_sides(ball_.face_index(p.face_a));
      ps.push_back({p.face_a, p.face_b, ((m - 2 - p.offset) % m + m) % m});
    }
    return Polyhedron(ball_.mirrored(), std::move(ps), name_);
  }

private:
  int side_image(int d) const {
    int f = ball_.dart_face(d);
    const FacePairing& p = pairings_[pairing_of_face_[f]];
    int fa = ball_.face_index(p.face_a);
    int fb = ball_.face_index(p.face_b);
    int m = ball_.face_sides(fa);
    int other = (f == fa) ? fb : fa;
    int j = ball_.dart_pos(d);
    return ball_.dart_id(other, ((p.offset - j) % m + m) % m);
  }

  // After a smoothing pass, compute each pairing's offset on the new words
  // and verify the whole side map is still an offset-with-reversal.
  std::vector<FacePairing> rederive_offsets(const CellDividedBall::WordRebuild& rebuilt) const {
    std::vector<FacePairing> out;
    for (const auto& p : pairings_) {
      int fa = ball_.face_index(p.face_a);
      int fb = ball_.face_index(p.face_b);
      int m_old = ball_.face_sides(fa);
      const auto& map_a = rebuilt.new_index_of_old[fa];
      const auto& map_b = rebuilt.new_index_of_old[fb];
      int m_new = static_cast<int>(rebuilt.faces[fa].word.size());
      if (m_new != static_cast<int>(rebuilt.faces[fb].word.size()))
        throw InternalConsistencyError("smoothing produced unequal side counts in a pairing");
      int k_new = -1;
      for (int s = 0; s < m_old; ++s) {
        int img = ((p.offset - s) % m_old + m_old) % m_old;
        int lhs = map_a[s], rhs = map_b[img];
        int k = (rhs + lhs) % m_new;
        if (k_new == -1) k_new = k;
        if (k != k_new)
          throw InternalConsistencyError("smoothed pairing " + p.face_a + "/" + p.face_b +
                                         " is no longer an offset map");
      }
      out.push_back({p.face_a, p.face_b, k_new});
    }
    return out;
  }

  std::vector<int> encode_from(int root, bool mirror) const {
    const int n = ball_.dart_count();
    std::vector<int> index(n, -1);
    std::vector<int> order;
    order.reserve(n);
    index[root] = 0;
    order.push_back(root);
    std::vector<int> code;
    code.reserve(3 * n);
    for (int qi = 0; qi < n; ++qi) {
      int d = order[qi];
      int nbrs[3] = {mirror ? ball_.phi_inv(d) : ball_.phi(d), ball_.iota(d), sigma_[d]};
      for (int x : nbrs) {
        if (index[x] == -1) {
          index[x] = static_cast<int>(order.size());
          order.push_back(x);
        }
        code.push_back(index[x]);
      }
    }
    return code;
  }

  CellDividedBall ball_;
  std::vector<FacePairing> pairings_;
  std::string name_;
  std::vector<int> pairing_of_face_;
  std::vector<int> sigma_;
};

inline bool isomorphic(const Polyhedron& p, const Polyhedron& q) {
  if (!p.is_standard() || !q.is_standard()) throw NotStandardError("isomorphic requires standard polyhedra");
  return p.canonical_code() == q.canonical_code();
}

}  // namespace pif
