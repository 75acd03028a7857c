#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pif/errors.hpp"
#include "pif/union_find.hpp"

namespace pif {

using Label = std::string;
using FaceName = std::string;

// One occurrence of an edge in a boundary word. `positive` says whether the
// boundary traversal follows the edge's own orientation.
struct SignedLabel {
  Label label;
  bool positive = true;

  friend bool operator==(const SignedLabel& a, const SignedLabel& b) = default;
  friend auto operator<=>(const SignedLabel& a, const SignedLabel& b) = default;

  SignedLabel negated() const { return {label, !positive}; }
  std::string str() const { return positive ? label : "-" + label; }
};

struct FaceWord {
  FaceName name;
  std::vector<SignedLabel> word;
};

// A dart is one signed-label occurrence, addressed by (face, position).
// Exposed for inspection; internally darts are flat integer ids.
struct Dart {
  FaceName face;
  int position = 0;
  Label label;
  bool positive = true;
};

// Oriented combinatorial map of the boundary 2-sphere of a ball: faces are
// cyclic boundary words over signed edge labels, read in the orientation
// induced by a fixed orientation of the ball. Immutable after construction;
// mutating operations return new values.
class CellDividedBall {
public:
  // Validates and assembles the map. Rejects with LabelCountError,
  // OrientationError, DisconnectedError or NotSphereError.
  static CellDividedBall build(std::vector<FaceWord> faces) { return CellDividedBall(std::move(faces)); }

  int face_count() const { return static_cast<int>(faces_.size()); }
  int edge_count() const { return static_cast<int>(label_darts_.size()); }
  int vertex_count() const { return static_cast<int>(vertex_darts_.size()); }
  int dart_count() const { return static_cast<int>(dart_face_.size()); }
  int euler_characteristic() const { return vertex_count() - edge_count() + face_count(); }

  const std::vector<FaceWord>& faces() const { return faces_; }
  const FaceWord& face(int f) const { return faces_.at(f); }

  int face_index(const FaceName& name) const {
    auto it = face_index_.find(name);
    if (it == face_index_.end()) throw UnknownFaceError("unknown face: " + name);
    return it->second;
  }
  bool has_face(const FaceName& name) const { return face_index_.count(name) != 0; }
  int face_sides(int f) const { return static_cast<int>(faces_[f].word.size()); }

  bool has_label(const Label& l) const { return label_darts_.count(l) != 0; }
  std::vector<Label> labels() const {
    std::vector<Label> out;
    for (const auto& [l, _] : label_darts_) out.push_back(l);
    return out;
  }

  // --- darts ---

  int dart_id(int f, int pos) const { return face_offset_[f] + pos; }
  int dart_face(int d) const { return dart_face_[d]; }
  int dart_pos(int d) const { return d - face_offset_[dart_face_[d]]; }
  const SignedLabel& dart_signed_label(int d) const { return faces_[dart_face_[d]].word[dart_pos(d)]; }

  Dart dart(int d) const {
    const auto& sl = dart_signed_label(d);
    return Dart{faces_[dart_face_[d]].name, dart_pos(d), sl.label, sl.positive};
  }

  // Next dart around the same face.
  int phi(int d) const {
    int f = dart_face_[d], m = face_sides(f);
    return face_offset_[f] + (dart_pos(d) + 1) % m;
  }
  int phi_inv(int d) const {
    int f = dart_face_[d], m = face_sides(f);
    return face_offset_[f] + (dart_pos(d) + m - 1) % m;
  }
  // The other dart carrying the same label.
  int iota(int d) const { return iota_[d]; }

  // The two darts of a label: [0] the positive occurrence, [1] the negative.
  std::array<int, 2> label_darts(const Label& l) const {
    auto it = label_darts_.find(l);
    if (it == label_darts_.end()) throw UnknownLabelError("unknown edge label: " + l);
    return it->second;
  }

  // --- derived vertices ---
  //
  // Vertices are orbits of d -> iota(phi(d)); the orbit of d collects every
  // dart whose head lies at one point of the sphere.

  // Vertex at the head of dart d.
  int vertex_at_head(int d) const { return dart_vertex_[d]; }
  // Vertex at corner j of face f (corner c_j precedes side j).
  int vertex_of_corner(int f, int corner) const {
    int m = face_sides(f);
    return dart_vertex_[dart_id(f, (corner + m - 1) % m)];
  }
  // Incoming darts of a vertex, in rotation order around it.
  const std::vector<int>& vertex_darts(int v) const {
    if (v < 0 || v >= vertex_count()) throw UnknownVertexError("unknown vertex id " + std::to_string(v));
    return vertex_darts_[v];
  }
  // The full partition of corners (as incoming darts) into vertex orbits.
  const std::vector<std::vector<int>>& vertex_orbits() const { return vertex_darts_; }
  // Edge-end incidences at the vertex; a loop contributes two.
  int vertex_degree(int v) const { return static_cast<int>(vertex_darts(v).size()); }

  int label_tail_vertex(const Label& l) const { return dart_vertex_[iota_[label_darts(l)[0]]]; }
  int label_head_vertex(const Label& l) const { return dart_vertex_[label_darts(l)[0]]; }

  // --- mutations (value-returning) ---

  // Replaces `l` by two labels meeting at a fresh degree-2 vertex.
  CellDividedBall subdivide_edge(const Label& l) const {
    if (!has_label(l)) throw UnknownLabelError("unknown edge label: " + l);
    auto halves = subdivision_names(l);
    std::vector<FaceWord> out;
    for (const auto& fw : faces_) {
      FaceWord nf{fw.name, {}};
      for (const auto& sl : fw.word) {
        if (sl.label != l) {
          nf.word.push_back(sl);
        } else if (sl.positive) {
          nf.word.push_back({halves.first, true});
          nf.word.push_back({halves.second, true});
        } else {
          nf.word.push_back({halves.second, false});
          nf.word.push_back({halves.first, false});
        }
      }
      out.push_back(std::move(nf));
    }
    return build(std::move(out));
  }

  // Merges the two edges meeting at a degree-2 vertex into one label.
  CellDividedBall smooth_vertex(int v) const {
    if (vertex_degree(v) != 2) throw DegreeError("smooth_vertex: vertex has degree " + std::to_string(vertex_degree(v)));
    const auto& in = vertex_darts_[v];
    if (dart_signed_label(in[0]).label == dart_signed_label(in[1]).label)
      throw LoopError("smooth_vertex: vertex lies on a loop edge");
    auto rebuilt = merge_at_corners({v});
    return build(std::move(rebuilt.faces));
  }

  // Word rebuild produced by smoothing a set of vertices at once.
  struct WordRebuild {
    std::vector<FaceWord> faces;
    // per original face: old side index -> new side index of its group
    std::vector<std::vector<int>> new_index_of_old;
  };

  // Smooths each vertex in `vs` (all must have degree 2, no loops, and no
  // edge may join two of them). Labels of a merged pair collapse onto the
  // lexicographically smaller one, keeping its orientation.
  WordRebuild merge_at_corners(const std::set<int>& vs) const {
    // Merged pair per smoothed vertex: incoming darts give the two edges.
    // The merged edge reuses the lexicographically smaller label and keeps
    // its orientation; the group loop below picks the sign accordingly.
    std::map<Label, Label> rename;
    for (int v : vs) {
      if (vertex_degree(v) != 2) throw DegreeError("merge_at_corners: vertex degree != 2");
      int da = vertex_darts_[v][0], db = vertex_darts_[v][1];
      const Label la = dart_signed_label(da).label;
      const Label lb = dart_signed_label(db).label;
      if (la == lb) throw LoopError("merge_at_corners: loop edge at vertex");
      if (rename.count(la) || rename.count(lb))
        throw InternalConsistencyError("merge_at_corners: edge merged at both ends");
      const Label keep = std::min(la, lb);
      rename[la] = keep;
      rename[lb] = keep;
    }

    std::vector<FaceWord> out(faces_.size());
    std::vector<std::vector<int>> index_map(faces_.size());
    for (int f = 0; f < face_count(); ++f) {
      int m = face_sides(f);
      // A corner j of face f is smoothed iff the incoming dart's head is in vs.
      std::vector<bool> smooth_corner(m, false);
      int smoothed = 0;
      for (int j = 0; j < m; ++j) {
        int incoming = dart_id(f, (j + m - 1) % m);
        if (vs.count(dart_vertex_[incoming])) {
          smooth_corner[j] = true;
          ++smoothed;
        }
      }
      if (smoothed == m) throw InternalConsistencyError("merge_at_corners: face dissolves entirely");
      // Group sides cyclically: a group starts at any unsoothed corner.
      int start = 0;
      while (smooth_corner[start]) ++start;
      FaceWord nf{faces_[f].name, {}};
      index_map[f].assign(m, -1);
      int j = start;
      do {
        // group = sides j, j+1, ... while the next corner is smoothed
        std::vector<int> group{j};
        int next = (j + 1) % m;
        while (smooth_corner[next]) {
          group.push_back(next);
          next = (next + 1) % m;
        }
        if (group.size() == 1) {
          for (int s : group) index_map[f][s] = static_cast<int>(nf.word.size());
          nf.word.push_back(faces_[f].word[group[0]]);
        } else if (group.size() == 2) {
          const SignedLabel& first = faces_[f].word[group[0]];
          const SignedLabel& second = faces_[f].word[group[1]];
          auto ra = rename.find(first.label);
          auto rb = rename.find(second.label);
          if (ra == rename.end() || rb == rename.end() || ra->second != rb->second)
            throw InternalConsistencyError("merge_at_corners: inconsistent merge group");
          const Label& keep = ra->second;
          bool sign = (first.label == keep) ? first.positive : second.positive;
          for (int s : group) index_map[f][s] = static_cast<int>(nf.word.size());
          nf.word.push_back({keep, sign});
        } else {
          throw InternalConsistencyError("merge_at_corners: merge group of size " + std::to_string(group.size()));
        }
        j = next;
      } while (j != start);
      out[f] = std::move(nf);
    }
    return {std::move(out), std::move(index_map)};
  }

  // Reads all face words in the opposite global orientation.
  CellDividedBall mirrored() const {
    std::vector<FaceWord> out;
    for (const auto& fw : faces_) {
      FaceWord nf{fw.name, {}};
      for (auto it = fw.word.rbegin(); it != fw.word.rend(); ++it) nf.word.push_back(it->negated());
      out.push_back(std::move(nf));
    }
    return build(std::move(out));
  }

  // Extends a seed dart correspondence to a full <phi, iota>-equivariant
  // bijection between this ball's darts and `other`'s. Returns nullopt when
  // no such bijection exists. `mirror` composes with orientation reversal.
  std::optional<std::vector<int>> extend_dart_map(const CellDividedBall& other, int seed_from, int seed_to,
                                                  bool mirror = false) const {
    if (dart_count() != other.dart_count()) return std::nullopt;
    std::vector<int> image(dart_count(), -1);
    image[seed_from] = seed_to;
    std::vector<int> queue{seed_from};
    auto visit = [&](int d, int target) -> bool {
      if (image[d] == -1) {
        image[d] = target;
        queue.push_back(d);
        return true;
      }
      return image[d] == target;
    };
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int d = queue[qi];
      int fd = mirror ? other.phi_inv(image[d]) : other.phi(image[d]);
      if (!visit(phi(d), fd)) return std::nullopt;
      if (!visit(iota(d), other.iota(image[d]))) return std::nullopt;
    }
    for (int d = 0; d < dart_count(); ++d)
      if (image[d] == -1) return std::nullopt;
    // must be a bijection
    std::vector<bool> hit(dart_count(), false);
    for (int d = 0; d < dart_count(); ++d) {
      if (hit[image[d]]) return std::nullopt;
      hit[image[d]] = true;
    }
    return image;
  }

private:
  explicit CellDividedBall(std::vector<FaceWord> faces) : faces_(std::move(faces)) {
    if (faces_.empty()) throw ParameterError("a ball needs at least one face");
    std::sort(faces_.begin(), faces_.end(), [](const FaceWord& a, const FaceWord& b) { return a.name < b.name; });
    for (int f = 0; f < face_count(); ++f) {
      if (faces_[f].word.empty()) throw ParameterError("face " + faces_[f].name + " has an empty boundary word");
      if (face_index_.count(faces_[f].name)) throw ParameterError("duplicate face name: " + faces_[f].name);
      face_index_[faces_[f].name] = f;
    }

    face_offset_.resize(faces_.size());
    int total = 0;
    for (int f = 0; f < face_count(); ++f) {
      face_offset_[f] = total;
      total += face_sides(f);
    }
    dart_face_.resize(total);
    for (int f = 0; f < face_count(); ++f)
      for (int p = 0; p < face_sides(f); ++p) dart_face_[face_offset_[f] + p] = f;

    // label -> (positive dart, negative dart)
    std::map<Label, std::vector<int>> occurrences;
    for (int d = 0; d < total; ++d) {
      const auto& sl = dart_signed_label(d);
      if (sl.label.empty()) throw ParameterError("empty edge label in face " + faces_[dart_face_[d]].name);
      occurrences[sl.label].push_back(d);
    }
    for (const auto& [l, ds] : occurrences) {
      if (ds.size() != 2)
        throw LabelCountError("label " + l + " occurs " + std::to_string(ds.size()) + " times (needs exactly 2)");
      bool s0 = dart_signed_label(ds[0]).positive;
      bool s1 = dart_signed_label(ds[1]).positive;
      if (s0 == s1)
        throw OrientationError("label " + l + " occurs twice with the same sign; boundary words are not coherently oriented");
      label_darts_[l] = s0 ? std::array<int, 2>{ds[0], ds[1]} : std::array<int, 2>{ds[1], ds[0]};
    }

    iota_.assign(total, -1);
    for (const auto& [l, pair] : label_darts_) {
      iota_[pair[0]] = pair[1];
      iota_[pair[1]] = pair[0];
    }

    // connectivity under <phi, iota>
    std::vector<bool> seen(total, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 0;
    while (!stack.empty()) {
      int d = stack.back();
      stack.pop_back();
      ++reached;
      for (int n : {phi(d), iota_[d]}) {
        if (!seen[n]) {
          seen[n] = true;
          stack.push_back(n);
        }
      }
    }
    if (reached != total) throw DisconnectedError("the boundary graph is not connected");

    // vertex orbits of d -> iota(phi(d))
    dart_vertex_.assign(total, -1);
    for (int d = 0; d < total; ++d) {
      if (dart_vertex_[d] != -1) continue;
      int vid = static_cast<int>(vertex_darts_.size());
      std::vector<int> orbit;
      int cur = d;
      while (dart_vertex_[cur] == -1) {
        dart_vertex_[cur] = vid;
        orbit.push_back(cur);
        cur = iota_[phi(cur)];
      }
      if (cur != d) throw InternalConsistencyError("vertex orbit did not close");
      vertex_darts_.push_back(std::move(orbit));
    }

    if (euler_characteristic() != 2)
      throw NotSphereError("V - E + F = " + std::to_string(euler_characteristic()) + ", expected 2");
  }

  std::pair<Label, Label> subdivision_names(const Label& l) const {
    auto fresh = [&](std::string candidate) {
      while (label_darts_.count(candidate)) candidate += "'";
      return candidate;
    };
    Label a = fresh(l + ".1");
    Label b = fresh(l + ".2");
    if (a == b) b += "'";
    return {a, b};
  }

  std::vector<FaceWord> faces_;
  std::map<FaceName, int> face_index_;
  std::vector<int> face_offset_;
  std::vector<int> dart_face_;
  std::vector<int> iota_;
  std::vector<int> dart_vertex_;
  std::vector<std::vector<int>> vertex_darts_;
  std::map<Label, std::array<int, 2>> label_darts_;
};

inline CellDividedBall build_ball(std::vector<FaceWord> faces) { return CellDividedBall::build(std::move(faces)); }

// Builds a ball from faces given as vertex cycles (each read counterclockwise
// from outside). Edges are generated per unordered vertex pair; the positive
// direction runs from the smaller to the larger endpoint.
inline CellDividedBall ball_from_vertex_cycles(const std::vector<std::pair<FaceName, std::vector<int>>>& cycles,
                                               const std::string& edge_prefix = "e") {
  std::map<std::pair<int, int>, Label> edge_names;
  for (const auto& [name, cyc] : cycles) {
    for (size_t i = 0; i < cyc.size(); ++i) {
      int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
      auto key = std::minmax(u, v);
      if (!edge_names.count(key)) {
        edge_names[key] = edge_prefix + std::to_string(edge_names.size());
      }
    }
  }
  std::vector<FaceWord> faces;
  for (const auto& [name, cyc] : cycles) {
    FaceWord fw{name, {}};
    for (size_t i = 0; i < cyc.size(); ++i) {
      int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
      fw.word.push_back({edge_names.at(std::minmax(u, v)), u < v});
    }
    faces.push_back(std::move(fw));
  }
  return CellDividedBall::build(std::move(faces));
}

}  // namespace pif
