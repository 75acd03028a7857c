#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "pif/errors.hpp"
#include "pif/scheme.hpp"

namespace pif {

namespace detail {

inline Label fresh_label(const CellDividedBall& ball, const std::string& base,
                         const std::set<Label>& also_taken = {}) {
  for (int i = 0;; ++i) {
    Label cand = base + std::to_string(i);
    if (!ball.has_label(cand) && !also_taken.count(cand)) return cand;
  }
}

inline FaceName fresh_face(const CellDividedBall& ball, const std::string& base,
                           const std::set<FaceName>& also_taken = {}) {
  if (!ball.has_face(base) && !also_taken.count(base)) return base;
  for (int i = 1;; ++i) {
    FaceName cand = base + "." + std::to_string(i);
    if (!ball.has_face(cand) && !also_taken.count(cand)) return cand;
  }
}

// Inclusive cyclic slice [from..to] of 0..m-1.
inline std::vector<int> cyclic_slice(int from, int to, int m) {
  std::vector<int> out;
  for (int j = from;; j = (j + 1) % m) {
    out.push_back(j);
    if (j == to) break;
  }
  return out;
}

// Derives the offset of a rebuilt pairing from position maps into the new
// words and checks that every side is consistent with offset-with-reversal.
inline int derive_offset(const std::vector<std::pair<int, int>>& position_pairs, int m_new,
                         const std::string& context) {
  int k = -1;
  for (auto [a, b] : position_pairs) {
    int cand = (a + b) % m_new;
    if (k == -1) k = cand;
    if (cand != k)
      throw InternalConsistencyError(context + ": rebuilt identification is not an offset map");
  }
  if (k == -1) throw InternalConsistencyError(context + ": empty pairing correspondence");
  return k;
}

}  // namespace detail

// --- consistent subdivision of a whole edge class ---

// Subdivides every edge of the class of `label`, updating all pairings. The
// mirrored subdivision keeps the scheme well defined (a partial subdivision
// would not).
inline Polyhedron subdivide_edge_class(const Polyhedron& p, const Label& label) {
  const CellDividedBall& ball = p.ball();
  if (!ball.has_label(label)) throw UnknownLabelError("unknown edge label: " + label);
  auto ec = p.edge_classes();
  const auto& cls = ec.classes[ec.class_of.at(label)];
  std::set<Label> members(cls.labels.begin(), cls.labels.end());

  std::map<Label, std::pair<Label, Label>> halves;
  std::set<Label> taken;
  for (const Label& l : cls.labels) {
    Label a = detail::fresh_label(ball, l + ".", taken);
    taken.insert(a);
    Label b = detail::fresh_label(ball, l + ".", taken);
    taken.insert(b);
    halves[l] = {a, b};
  }

  std::vector<FaceWord> faces;
  // per face: old side -> (first new position, block length)
  std::vector<std::vector<std::pair<int, int>>> spans(ball.face_count());
  for (int f = 0; f < ball.face_count(); ++f) {
    const FaceWord& fw = ball.face(f);
    FaceWord nf{fw.name, {}};
    spans[f].resize(fw.word.size());
    for (int s = 0; s < static_cast<int>(fw.word.size()); ++s) {
      const SignedLabel& sl = fw.word[s];
      int at = static_cast<int>(nf.word.size());
      if (!members.count(sl.label)) {
        spans[f][s] = {at, 1};
        nf.word.push_back(sl);
      } else {
        auto [h1, h2] = halves.at(sl.label);
        spans[f][s] = {at, 2};
        if (sl.positive) {
          nf.word.push_back({h1, true});
          nf.word.push_back({h2, true});
        } else {
          nf.word.push_back({h2, false});
          nf.word.push_back({h1, false});
        }
      }
    }
    faces.push_back(std::move(nf));
  }

  std::vector<FacePairing> pairings;
  for (const auto& pr : p.pairings()) {
    int fa = ball.face_index(pr.face_a), fb = ball.face_index(pr.face_b);
    int m = ball.face_sides(fa);
    int m_new = static_cast<int>(faces[fa].word.size());
    std::vector<std::pair<int, int>> corr;
    for (int s = 0; s < m; ++s) {
      int t = ((pr.offset - s) % m + m) % m;
      auto [na, la] = spans[fa][s];
      auto [nb, lb] = spans[fb][t];
      if (la != lb)
        throw InternalConsistencyError("subdivide_edge_class: paired sides subdivided unequally");
      // a block maps onto its image block reversed
      corr.push_back({na, nb + lb - 1});
    }
    pairings.push_back({pr.face_a, pr.face_b, detail::derive_offset(corr, m_new, "subdivide_edge_class")});
  }
  return Polyhedron(CellDividedBall::build(std::move(faces)), std::move(pairings), p.name());
}

// --- insertion of an edge of cycle 2: chord variant ---

// Splits `face` along a new edge from corner_i to corner_j, mirroring the
// chord in the partner face; the two new pairings restrict the old one.
inline Polyhedron insert_chord(const Polyhedron& p, const FaceName& face, int corner_i, int corner_j) {
  const CellDividedBall& ball = p.ball();
  if (!ball.has_face(face)) throw UnknownFaceError("unknown face: " + face);
  int fa = ball.face_index(face);
  int m = ball.face_sides(fa);
  if (corner_i < 0 || corner_i >= m || corner_j < 0 || corner_j >= m)
    throw DegenerateChordError("chord corner out of range 0.." + std::to_string(m - 1));
  if (corner_i == corner_j) throw DegenerateChordError("chord endpoints coincide");

  const FacePairing& pr = p.pairing_of(face);
  const FaceName partner = (pr.face_a == face) ? pr.face_b : pr.face_a;
  int fb = ball.face_index(partner);
  int k = pr.offset;

  Label a1 = detail::fresh_label(ball, "c");
  Label a2 = detail::fresh_label(ball, "c", {a1});

  // image corners under the corner map
  int ci2 = ((k - corner_i + 1) % m + m) % m;
  int cj2 = ((k - corner_j + 1) % m + m) % m;

  const auto& wa = ball.face(fa).word;
  const auto& wb = ball.face(fb).word;

  std::set<FaceName> taken;
  FaceName nx = detail::fresh_face(ball, face + ".1", taken);
  taken.insert(nx);
  FaceName ny = detail::fresh_face(ball, face + ".2", taken);
  taken.insert(ny);
  FaceName nx2 = detail::fresh_face(ball, partner + ".1", taken);
  taken.insert(nx2);
  FaceName ny2 = detail::fresh_face(ball, partner + ".2", taken);

  // X carries sides corner_i..corner_j-1 then the chord (corner_j -> corner_i
  // direction is -a1 with a1 oriented corner_i -> corner_j).
  auto sx = detail::cyclic_slice(corner_i, (corner_j + m - 1) % m, m);
  auto sy = detail::cyclic_slice(corner_j, (corner_i + m - 1) % m, m);
  auto sx2 = detail::cyclic_slice(cj2, (ci2 + m - 1) % m, m);
  auto sy2 = detail::cyclic_slice(ci2, (cj2 + m - 1) % m, m);

  FaceWord fx{nx, {}}, fy{ny, {}}, fx2{nx2, {}}, fy2{ny2, {}};
  std::map<int, std::pair<int, int>> pos_a, pos_b;  // old side -> (which face: 0=X/1=Y, position)
  for (int s : sx) {
    pos_a[s] = {0, static_cast<int>(fx.word.size())};
    fx.word.push_back(wa[s]);
  }
  fx.word.push_back({a1, false});
  for (int s : sy) {
    pos_a[s] = {1, static_cast<int>(fy.word.size())};
    fy.word.push_back(wa[s]);
  }
  fy.word.push_back({a1, true});
  for (int s : sx2) {
    pos_b[s] = {0, static_cast<int>(fx2.word.size())};
    fx2.word.push_back(wb[s]);
  }
  fx2.word.push_back({a2, true});
  for (int s : sy2) {
    pos_b[s] = {1, static_cast<int>(fy2.word.size())};
    fy2.word.push_back(wb[s]);
  }
  fy2.word.push_back({a2, false});

  std::vector<FaceWord> faces;
  for (int f = 0; f < ball.face_count(); ++f) {
    if (f == fa || f == fb) continue;
    faces.push_back(ball.face(f));
  }
  faces.push_back(fx);
  faces.push_back(fy);
  faces.push_back(fx2);
  faces.push_back(fy2);

  // offsets: old sides correspond through the old pairing; chords map to
  // each other, which derive_offset cross-checks via the side count.
  std::vector<std::pair<int, int>> corr_x, corr_y;
  for (int s = 0; s < m; ++s) {
    int t = ((k - s) % m + m) % m;
    auto [wf, ps] = pos_a[s];
    auto [wg, pt] = pos_b[t];
    if (wf == 0 && wg != 0)
      throw InternalConsistencyError("insert_chord: X side does not map into X'");
    if (wf == 1 && wg != 1)
      throw InternalConsistencyError("insert_chord: Y side does not map into Y'");
    (wf == 0 ? corr_x : corr_y).push_back({ps, pt});
  }
  int mx = static_cast<int>(fx.word.size());
  int my = static_cast<int>(fy.word.size());
  int kx = detail::derive_offset(corr_x, mx, "insert_chord X");
  int ky = detail::derive_offset(corr_y, my, "insert_chord Y");
  // the chord side must map to the mirrored chord side
  if ((kx - (mx - 1) % mx + mx) % mx != mx - 1 || (ky - (my - 1) % my + my) % my != my - 1)
    throw InternalConsistencyError("insert_chord: chord sides fail to correspond");

  std::vector<FacePairing> pairings;
  for (const auto& q : p.pairings()) {
    if (q.face_a == pr.face_a && q.face_b == pr.face_b) continue;
    pairings.push_back(q);
  }
  pairings.push_back({nx, nx2, kx});
  pairings.push_back({ny, ny2, ky});
  return Polyhedron(CellDividedBall::build(std::move(faces)), std::move(pairings), p.name());
}

// --- insertion of an edge of cycle 2: dangling variant ---

struct AttachAtCorner {
  int corner = 0;
};
struct AttachOnEdge {
  Label label;
};
using AttachPoint = std::variant<AttachAtCorner, AttachOnEdge>;

// Draws a new edge with a free endpoint into `face`, mirrored in the partner
// face; the face keeps a single pairing. Attaching on an edge interior first
// subdivides that edge's whole class.
inline Polyhedron insert_dangling(const Polyhedron& p, const FaceName& face, const AttachPoint& at) {
  const CellDividedBall& ball0 = p.ball();
  if (!ball0.has_face(face)) throw UnknownFaceError("unknown face: " + face);

  if (std::holds_alternative<AttachOnEdge>(at)) {
    const Label& l = std::get<AttachOnEdge>(at).label;
    if (!ball0.has_label(l)) throw UnknownLabelError("unknown edge label: " + l);
    int f = ball0.face_index(face);
    int side = -1;
    for (int s = 0; s < ball0.face_sides(f); ++s) {
      if (ball0.face(f).word[s].label == l) {
        side = s;
        break;
      }
    }
    if (side == -1) throw ParameterError("edge " + l + " is not a side of face " + face);
    Polyhedron sub = subdivide_edge_class(p, l);
    // the new corner sits between the two halves of the subdivided side
    int f2 = sub.ball().face_index(face);
    int corner = -1;
    const auto& w0 = ball0.face(f).word;
    int pos = 0;
    auto ecl = p.edge_classes();
    std::set<Label> members(ecl.classes[ecl.class_of.at(l)].labels.begin(),
                            ecl.classes[ecl.class_of.at(l)].labels.end());
    for (int s = 0; s < static_cast<int>(w0.size()); ++s) {
      int len = members.count(w0[s].label) ? 2 : 1;
      if (s == side) {
        corner = pos + 1;
        break;
      }
      pos += len;
    }
    if (corner < 0 || corner >= sub.ball().face_sides(f2))
      throw InternalConsistencyError("insert_dangling: lost track of the subdivision corner");
    return insert_dangling(sub, face, AttachAtCorner{corner});
  }

  int corner = std::get<AttachAtCorner>(at).corner;
  int fa = ball0.face_index(face);
  int m = ball0.face_sides(fa);
  if (corner < 0 || corner >= m) throw ParameterError("attach corner out of range 0.." + std::to_string(m - 1));

  const FacePairing& pr = p.pairing_of(face);
  const FaceName partner = (pr.face_a == face) ? pr.face_b : pr.face_a;
  int fb = ball0.face_index(partner);
  int k = pr.offset;
  int corner2 = ((k - corner + 1) % m + m) % m;

  Label a1 = detail::fresh_label(ball0, "d");
  Label a2 = detail::fresh_label(ball0, "d", {a1});

  // two candidate orientations for the mirrored spur; exactly one glues the
  // attach points together, which the offset/sign check below selects
  for (bool mirrored_positive_first : {true, false}) {
    std::vector<FaceWord> faces;
    std::vector<int> map_a(m), map_b(m);
    for (int f = 0; f < ball0.face_count(); ++f) {
      if (f != fa && f != fb) {
        faces.push_back(ball0.face(f));
        continue;
      }
      const auto& w = ball0.face(f).word;
      FaceWord nf{ball0.face(f).name, {}};
      int at_corner = (f == fa) ? corner : corner2;
      for (int s = 0; s < m; ++s) {
        if (s == at_corner) {
          if (f == fa) {
            nf.word.push_back({a1, true});
            nf.word.push_back({a1, false});
          } else if (mirrored_positive_first) {
            nf.word.push_back({a2, true});
            nf.word.push_back({a2, false});
          } else {
            nf.word.push_back({a2, false});
            nf.word.push_back({a2, true});
          }
        }
        ((f == fa) ? map_a : map_b)[s] = static_cast<int>(nf.word.size());
        nf.word.push_back(w[s]);
      }
      faces.push_back(std::move(nf));
    }

    int m_new = m + 2;
    std::vector<std::pair<int, int>> corr;
    for (int s = 0; s < m; ++s) corr.push_back({map_a[s], map_b[((k - s) % m + m) % m]});
    int k_new;
    try {
      k_new = detail::derive_offset(corr, m_new, "insert_dangling");
    } catch (const InternalConsistencyError&) {
      continue;
    }
    // the +a1 side must land on the -a2 side so that attach point glues to
    // attach point and free end to free end
    int img = ((k_new - corner) % m_new + m_new) % m_new;
    const FaceWord* fb_new = nullptr;
    for (const auto& fw : faces)
      if (fw.name == partner) fb_new = &fw;
    if (!fb_new) throw InternalConsistencyError("insert_dangling: partner face vanished");
    const SignedLabel& sl = fb_new->word[img];
    if (sl.label != a2 || sl.positive) continue;

    std::vector<FacePairing> pairings;
    for (const auto& q : p.pairings()) {
      if (q.face_a == pr.face_a && q.face_b == pr.face_b)
        pairings.push_back({q.face_a, q.face_b, k_new});
      else
        pairings.push_back(q);
    }
    return Polyhedron(CellDividedBall::build(std::move(faces)), std::move(pairings), p.name());
  }
  throw InternalConsistencyError("insert_dangling: no spur orientation satisfies the side map");
}

// --- remotion of an edge of cycle 2 ---

// Removes the cycle-2 class containing `label`. The two faces adjacent
// across each removed edge merge and their pairings fuse into one; the
// result is passed through standard_form.
inline Polyhedron remove_cycle2(const Polyhedron& p, const Label& label) {
  const CellDividedBall& ball = p.ball();
  if (!ball.has_label(label)) throw UnknownLabelError("unknown edge label: " + label);
  auto ec = p.edge_classes();
  const auto& cls = ec.classes[ec.class_of.at(label)];
  if (cls.cycle() != 2)
    throw NotCycle2Error("class of " + label + " has cycle " + std::to_string(cls.cycle()));
  const Label a1 = cls.labels[0];
  const Label a2 = cls.labels[1];

  // G' = closure(G - a1 - a2) must stay connected and nonempty
  {
    std::map<int, std::vector<int>> adj;
    int edges_left = 0;
    for (const Label& l : ball.labels()) {
      if (l == a1 || l == a2) continue;
      int u = ball.label_tail_vertex(l), v = ball.label_head_vertex(l);
      adj[u].push_back(v);
      adj[v].push_back(u);
      ++edges_left;
    }
    if (edges_left == 0) throw DisconnectError("removing " + a1 + "," + a2 + " leaves no graph");
    std::set<int> seen{adj.begin()->first};
    std::vector<int> stack{adj.begin()->first};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (seen.insert(w).second) stack.push_back(w);
    }
    if (seen.size() != adj.size())
      throw DisconnectError("removing " + a1 + "," + a2 + " disconnects the boundary graph");
  }

  auto darts1 = ball.label_darts(a1);
  auto darts2 = ball.label_darts(a2);
  int f1 = ball.dart_face(darts1[0]), g1 = ball.dart_face(darts1[1]);
  int f2 = ball.dart_face(darts2[0]), g2 = ball.dart_face(darts2[1]);

  std::vector<FaceWord> faces;
  std::vector<FacePairing> pairings;

  if (f1 == g1) {
    // dangling spur: occurrences must be adjacent
    int i = ball.dart_pos(darts1[0]), j = ball.dart_pos(darts1[1]);
    int m = ball.face_sides(f1);
    bool adjacent = (j == (i + 1) % m) || (i == (j + 1) % m);
    if (!adjacent)
      throw SelfMergeError("both sides of " + a1 + " bound face " + ball.face(f1).name +
                           " non-adjacently; removal would not leave a disk face");
    if (f2 != g2 || f2 == f1) throw InternalConsistencyError("remove_cycle2: mirrored spur is not a spur");

    auto drop_pair = [&](int f, const Label& l, std::vector<int>& map_out) {
      const auto& w = ball.face(f).word;
      FaceWord nf{ball.face(f).name, {}};
      map_out.assign(w.size(), -1);
      for (int s = 0; s < static_cast<int>(w.size()); ++s) {
        if (w[s].label == l) continue;
        map_out[s] = static_cast<int>(nf.word.size());
        nf.word.push_back(w[s]);
      }
      return nf;
    };
    std::vector<int> map1, map2;
    FaceWord nf1 = drop_pair(f1, a1, map1);
    FaceWord nf2 = drop_pair(f2, a2, map2);
    if (nf1.word.empty() || nf2.word.empty())
      throw DisconnectError("removing " + a1 + "," + a2 + " dissolves a face");
    for (int f = 0; f < ball.face_count(); ++f) {
      if (f == f1)
        faces.push_back(nf1);
      else if (f == f2)
        faces.push_back(nf2);
      else
        faces.push_back(ball.face(f));
    }
    const FacePairing& pr = p.pairing_of(ball.face(f1).name);
    int m_new = static_cast<int>(nf1.word.size());
    std::vector<std::pair<int, int>> corr;
    const std::vector<int>& ma = (ball.face_index(pr.face_a) == f1) ? map1 : map2;
    const std::vector<int>& mb = (ball.face_index(pr.face_a) == f1) ? map2 : map1;
    for (int s = 0; s < m; ++s) {
      int t = ((pr.offset - s) % m + m) % m;
      if (ma[s] == -1) continue;
      if (mb[t] == -1) throw InternalConsistencyError("remove_cycle2: spur maps to a non-spur side");
      corr.push_back({ma[s], mb[t]});
    }
    for (const auto& q : p.pairings()) {
      if (q.face_a == pr.face_a && q.face_b == pr.face_b)
        pairings.push_back({q.face_a, q.face_b, detail::derive_offset(corr, m_new, "remove_cycle2 spur")});
      else
        pairings.push_back(q);
    }
  } else {
    // a1 merges two distinct faces; they must belong to different pairings
    if (p.pairing_index_of(f1) == p.pairing_index_of(g1))
      throw SelfMergeError("faces across " + a1 + " belong to one pairing; merging them would self-pair");
    // order the a2 surgery by sigma so the merged blocks correspond
    int df1 = darts1[0], dg1 = darts1[1];
    int df2 = p.side_map(df1), dg2 = p.side_map(dg1);
    if (ball.dart_signed_label(df2).label != a2 || ball.dart_signed_label(dg2).label != a2)
      throw InternalConsistencyError("remove_cycle2: side map does not pair the class edges");
    int pf1 = ball.dart_face(df2), pg1 = ball.dart_face(dg2);
    if (pf1 == pg1) throw SelfMergeError("mirrored edge " + a2 + " bounds a single face");

    auto splice = [&](int fx, int dx, int fy, int dy, std::vector<int>& mx, std::vector<int>& my) {
      // new face = fx minus side(dx), with fy minus side(dy) spliced in
      const auto& wx = ball.face(fx).word;
      const auto& wy = ball.face(fy).word;
      int mx_count = static_cast<int>(wx.size());
      int my_count = static_cast<int>(wy.size());
      int ix = ball.dart_pos(dx), iy = ball.dart_pos(dy);
      FaceWord nf{std::min(ball.face(fx).name, ball.face(fy).name), {}};
      mx.assign(mx_count, -1);
      my.assign(my_count, -1);
      for (int r = 1; r < mx_count; ++r) {
        int s = (ix + r) % mx_count;
        mx[s] = static_cast<int>(nf.word.size());
        nf.word.push_back(wx[s]);
      }
      for (int r = 1; r < my_count; ++r) {
        int s = (iy + r) % my_count;
        my[s] = static_cast<int>(nf.word.size());
        nf.word.push_back(wy[s]);
      }
      return nf;
    };

    std::vector<int> m_f1, m_g1, m_pf1, m_pg1;
    FaceWord merged_a = splice(f1, darts1[0], g1, darts1[1], m_f1, m_g1);
    FaceWord merged_b = splice(pf1, df2, pg1, dg2, m_pf1, m_pg1);
    if (merged_a.word.empty() || merged_b.word.empty())
      throw DisconnectError("removing " + a1 + "," + a2 + " dissolves a face");

    for (int f = 0; f < ball.face_count(); ++f) {
      if (f == f1) faces.push_back(merged_a);
      if (f == f1 || f == g1 || f == pf1 || f == pg1) continue;
      faces.push_back(ball.face(f));
    }
    faces.push_back(merged_b);

    // correspondence over all surviving sides of the two old pairings;
    // f1 pairs with pf1 and g1 with pg1, and both fuse into one pairing
    int m_new = static_cast<int>(merged_a.word.size());
    std::vector<std::pair<int, int>> corr;
    std::map<int, const std::vector<int>*> pos_of_face{
        {f1, &m_f1}, {g1, &m_g1}, {pf1, &m_pf1}, {pg1, &m_pg1}};
    for (int fx : {f1, g1}) {
      const FacePairing& q = p.pairings()[p.pairing_index_of(fx)];
      int qa = ball.face_index(q.face_a);
      int qb = ball.face_index(q.face_b);
      int mm = ball.face_sides(qa);
      const auto& pos_a = *pos_of_face.at(qa);
      const auto& pos_b = *pos_of_face.at(qb);
      for (int s = 0; s < mm; ++s) {
        int t = ((q.offset - s) % mm + mm) % mm;
        if (pos_a[s] == -1) {
          if (pos_b[t] != -1)
            throw InternalConsistencyError("remove_cycle2: removed side pairs with a kept side");
          continue;
        }
        if (pos_b[t] == -1) throw InternalConsistencyError("remove_cycle2: kept side pairs with a removed side");
        // one of qa, qb lies in merged_a; orient the pair accordingly
        bool a_side_in_merged_a = (qa == f1 || qa == g1);
        corr.push_back(a_side_in_merged_a ? std::pair{pos_a[s], pos_b[t]} : std::pair{pos_b[t], pos_a[s]});
      }
    }
    for (const auto& q : p.pairings()) {
      int qa = ball.face_index(q.face_a);
      if (qa == f1 || qa == g1 || qa == pf1 || qa == pg1) continue;
      int qb = ball.face_index(q.face_b);
      if (qb == f1 || qb == g1 || qb == pf1 || qb == pg1) continue;
      pairings.push_back(q);
    }
    pairings.push_back({merged_a.name, merged_b.name, detail::derive_offset(corr, m_new, "remove_cycle2 merge")});
  }

  Polyhedron out(CellDividedBall::build(std::move(faces)), std::move(pairings), p.name());
  return out.standard_form();
}

// --- essential graph and minimization ---

struct EssentialGraph {
  std::vector<Label> labels;  // edges in classes of cycle != 2, sorted
  std::vector<int> vertices;  // their endpoint vertices (ball ids)
  bool empty = true;
  bool connected = false;
};

inline EssentialGraph essential_graph(const Polyhedron& p) {
  EssentialGraph out;
  auto ec = p.edge_classes();
  std::set<int> verts;
  for (const auto& c : ec.classes) {
    if (c.cycle() == 2) continue;
    for (const auto& l : c.labels) {
      out.labels.push_back(l);
      verts.insert(p.ball().label_tail_vertex(l));
      verts.insert(p.ball().label_head_vertex(l));
    }
  }
  std::sort(out.labels.begin(), out.labels.end());
  out.vertices.assign(verts.begin(), verts.end());
  out.empty = out.labels.empty();
  if (out.empty) return out;

  std::map<int, std::vector<int>> adj;
  for (const auto& l : out.labels) {
    int u = p.ball().label_tail_vertex(l), v = p.ball().label_head_vertex(l);
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::set<int> seen{out.vertices.front()};
  std::vector<int> stack{out.vertices.front()};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (seen.insert(w).second) stack.push_back(w);
  }
  out.connected = seen.size() == verts.size();
  return out;
}

struct MinimizeResult {
  enum class Outcome { Minimum, GammaEmpty, Stuck };
  Outcome outcome = Outcome::Minimum;
  Polyhedron result;
  std::vector<std::vector<Label>> removal_trace;  // member labels of each removed class
  std::vector<std::vector<Label>> blocked;        // cycle-2 classes that resisted removal
};

// Greedy remotion of cycle-2 classes, lexicographically smallest removable
// class first (largest first with reverse_order, used to confirm the result
// does not depend on the removal order).
inline MinimizeResult minimize(const Polyhedron& p, bool reverse_order = false) {
  MinimizeResult res{MinimizeResult::Outcome::Minimum, p.standard_form(), {}, {}};
  while (true) {
    auto ec = res.result.edge_classes();
    std::vector<const EdgeClass*> cyc2;
    for (const auto& c : ec.classes)
      if (c.cycle() == 2) cyc2.push_back(&c);
    if (cyc2.empty()) {
      res.outcome = MinimizeResult::Outcome::Minimum;
      return res;
    }
    if (reverse_order) std::reverse(cyc2.begin(), cyc2.end());
    bool removed = false;
    std::vector<std::vector<Label>> blocked;
    for (const EdgeClass* c : cyc2) {
      try {
        Polyhedron next = remove_cycle2(res.result, c->labels[0]);
        res.removal_trace.push_back(c->labels);
        res.result = std::move(next);
        removed = true;
        break;
      } catch (const DisconnectError&) {
        blocked.push_back(c->labels);
      } catch (const SelfMergeError&) {
        blocked.push_back(c->labels);
      }
    }
    if (removed) continue;
    res.blocked = std::move(blocked);
    res.outcome = essential_graph(res.result).empty ? MinimizeResult::Outcome::GammaEmpty
                                                    : MinimizeResult::Outcome::Stuck;
    return res;
  }
}

// --- the distinguished predicate ---

// All edge classes of cycle 3, all vertex classes of order 4, all vertices
// trivalent. Also exercises the implication cycle-3 + trivalent => order 4.
inline bool is_distinguished(const Polyhedron& p) {
  if (!p.is_standard()) throw NotStandardError("is_distinguished requires a standard polyhedron");
  auto ec = p.edge_classes();
  auto vc = p.vertex_classes();
  bool cycles3 = std::all_of(ec.classes.begin(), ec.classes.end(),
                             [](const EdgeClass& c) { return c.cycle() == 3; });
  bool orders4 = std::all_of(vc.classes.begin(), vc.classes.end(),
                             [](const VertexClass& c) { return c.order() == 4; });
  bool trivalent = true;
  for (int v = 0; v < p.ball().vertex_count(); ++v)
    if (p.ball().vertex_degree(v) != 3) trivalent = false;
  if (cycles3 && trivalent && !orders4)
    throw InternalConsistencyError("cycle-3 trivalent polyhedron with a vertex order != 4");
  return cycles3 && orders4 && trivalent;
}

}  // namespace pif
