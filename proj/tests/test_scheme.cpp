#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>

#include "pif/catalog.hpp"
#include "pif/moves.hpp"
#include "pif/quotient.hpp"
#include "pif/scheme.hpp"

#include "oracle_support.hpp"

using namespace pif;

namespace {

std::vector<int> cycles_of(const Polyhedron& p) {
  std::vector<int> out;
  for (const auto& c : p.edge_classes().classes) out.push_back(c.cycle());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> orders_of(const Polyhedron& p) {
  std::vector<int> out;
  for (const auto& c : p.vertex_classes().classes) out.push_back(c.order());
  std::sort(out.begin(), out.end());
  return out;
}

Polyhedron relabeled(const Polyhedron& p, const std::string& prefix) {
  std::vector<FaceWord> faces;
  for (const auto& fw : p.ball().faces()) {
    FaceWord nf{prefix + fw.name, {}};
    for (const auto& sl : fw.word) nf.word.push_back({prefix + sl.label, sl.positive});
    faces.push_back(std::move(nf));
  }
  std::vector<FacePairing> ps;
  for (const auto& pr : p.pairings()) ps.push_back({prefix + pr.face_a, prefix + pr.face_b, pr.offset});
  return Polyhedron(CellDividedBall::build(std::move(faces)), std::move(ps), p.name());
}

}  // namespace

TEST_CASE("side map formula and involution") {
  Polyhedron l = lens(3, 1);
  const auto& ball = l.ball();
  int k = l.pairings().front().offset;
  int n0 = ball.dart_id(ball.face_index("N"), 0);
  int img = l.side_map(n0);
  CHECK(ball.dart_face(img) == ball.face_index("S"));
  CHECK(ball.dart_pos(img) == k);

  Polyhedron q = cube_twist(CubeTwist::Quarter);
  CHECK(q.ball().dart_count() == 24);
  CHECK(is_involution(q.side_map_table()));
}

TEST_CASE("a corrupted side table fails the involution check") {
  Polyhedron q = cube_twist(CubeTwist::Quarter);
  std::vector<int> table = q.side_map_table();
  // splice in the image of a different dart, as a mismatched offset would
  table[0] = table[q.ball().phi(0)];
  CHECK_FALSE(is_involution(table));
}

TEST_CASE("corner map formula on the p=2 lens") {
  for (int q = 0; q < 2; ++q) {
    Polyhedron l = lens(2, q);
    int k = l.pairings().front().offset;
    auto [face, corner] = l.corner_map(l.ball().face_index("N"), 0);
    CHECK(face == l.ball().face_index("S"));
    CHECK(corner == (k + 1) % 2);
  }
}

TEST_CASE("corner map is involutive and consistent with the side map") {
  for (const Polyhedron& p : {cube_twist(CubeTwist::Quarter), lens(5, 2), dodecahedral_space()}) {
    const auto& ball = p.ball();
    for (int f = 0; f < ball.face_count(); ++f) {
      int m = ball.face_sides(f);
      for (int j = 0; j < m; ++j) {
        auto [g, j2] = p.corner_map(f, j);
        auto [f2, j3] = p.corner_map(g, j2);
        CHECK(f2 == f);
        CHECK(j3 == j);
        // tail corner of side j maps to the head corner of the image side
        int img = p.side_map(ball.dart_id(f, j));
        int mg = ball.face_sides(ball.dart_face(img));
        CHECK(ball.dart_face(img) == g);
        CHECK((ball.dart_pos(img) + 1) % mg == j2 % mg);
      }
    }
  }
}

TEST_CASE("edge classes match the classical counts and the oracle") {
  Polyhedron t = cube_twist(CubeTwist::None);
  CHECK(cycles_of(t) == std::vector<int>{4, 4, 4});
  Polyhedron q = cube_twist(CubeTwist::Quarter);
  CHECK(cycles_of(q) == std::vector<int>{3, 3, 3, 3});
  Polyhedron l = lens(5, 2);
  CHECK(cycles_of(l) == std::vector<int>{5});

  for (const Polyhedron& p : {t, q, l}) {
    CHECK(cycles_of(p) == oracle::edge_cycle_sizes(oracle::raw_of(p)));
    int total = 0;
    for (int c : cycles_of(p)) total += c;
    CHECK(total == p.ball().edge_count());
  }
}

TEST_CASE("vertex classes match the classical counts and the oracle") {
  CHECK(orders_of(cube_twist(CubeTwist::None)) == std::vector<int>{8});
  CHECK(orders_of(cube_twist(CubeTwist::Quarter)) == std::vector<int>{4, 4});
  CHECK(orders_of(dodecahedral_space()) == std::vector<int>{4, 4, 4, 4, 4});

  for (const Polyhedron& p : {cube_twist(CubeTwist::None), cube_twist(CubeTwist::Quarter), lens(7, 2)}) {
    CHECK(orders_of(p) == oracle::vertex_order_sizes(oracle::raw_of(p)));
    int total = 0;
    for (int c : orders_of(p)) total += c;
    CHECK(total == p.ball().vertex_count());
  }
}

TEST_CASE("classes partition labels and vertices") {
  Polyhedron p = dodecahedral_space();
  auto ec = p.edge_classes();
  std::set<Label> seen;
  for (const auto& c : ec.classes)
    for (const auto& l : c.labels) CHECK(seen.insert(l).second);
  CHECK(static_cast<int>(seen.size()) == p.ball().edge_count());

  auto vc = p.vertex_classes();
  std::set<int> seen_v;
  for (const auto& c : vc.classes)
    for (int v : c.vertices) CHECK(seen_v.insert(v).second);
  CHECK(static_cast<int>(seen_v.size()) == p.ball().vertex_count());
}

TEST_CASE("pairing validation rejects bad schemes") {
  CellDividedBall ball = lens_ball(3);
  CHECK_THROWS_AS(Polyhedron(ball, {{"N", "N", 0}}), PairingError);
  CHECK_THROWS_AS(Polyhedron(ball, {{"N", "S", 5}}), PairingError);
  CHECK_THROWS_AS(Polyhedron(ball, {}), PairingError);
}

TEST_CASE("standard form smooths a subdivided class back to the original") {
  Polyhedron q = cube_twist(CubeTwist::Quarter);
  Label l = q.edge_classes().classes.front().labels.front();
  Polyhedron sub = subdivide_edge_class(q, l);
  CHECK(sub.ball().edge_count() == 15);  // a cycle-3 class was subdivided
  CHECK(sub.ball().vertex_count() == 11);
  CHECK_FALSE(sub.is_standard());
  Polyhedron back = sub.standard_form();
  CHECK(back.is_standard());
  CHECK(isomorphic(back, q));

  // the subdivision and its smoothing leave the quotient untouched
  HomologyResult before = homology(q);
  for (const Polyhedron& var : {sub, back}) {
    HomologyResult h = homology(var);
    CHECK(h.betti == before.betti);
    CHECK(h.torsion == before.torsion);
    CHECK(chi_quotient(var) == chi_quotient(q));
  }
}

TEST_CASE("standard form is idempotent and keeps standard polyhedra unchanged") {
  for (const Polyhedron& p : {cube_twist(CubeTwist::Quarter), lens(5, 2), lens(2, 1)}) {
    CHECK(p.is_standard());
    Polyhedron s = p.standard_form();
    CHECK(isomorphic(s, p));
    CHECK(isomorphic(s.standard_form(), s));
  }
}

TEST_CASE("the p=2 lens keeps its degree-2 vertices (condition 2 fails)") {
  Polyhedron l = lens(2, 1);
  // both vertices have degree 2 but every edge joins the two class members
  CHECK(l.needless_classes().empty());
  CHECK(l.is_standard());
}

TEST_CASE("canonical form is relabeling invariant") {
  Polyhedron q = cube_twist(CubeTwist::Quarter);
  CHECK(q.canonical_form() == relabeled(q, "zz_").canonical_form());
  CHECK(isomorphic(lens(3, 1), relabeled(lens(3, 1), "x")));
}

TEST_CASE("canonical form separates different schemes") {
  CHECK(cube_twist(CubeTwist::Quarter).canonical_form() != cube_twist(CubeTwist::None).canonical_form());
  CHECK_FALSE(isomorphic(lens(5, 1), lens(5, 2)));
  CHECK(isomorphic(lens(5, 2), lens(5, 2)));
}

TEST_CASE("mirror images canonicalize identically") {
  Polyhedron l = lens(5, 2);
  CHECK(l.mirrored().canonical_form() == l.canonical_form());
  CHECK(isomorphic(l.mirrored(), l));
  // the mirror of lens(p, q) is lens(p, p-q)
  CHECK(isomorphic(lens(5, 2).mirrored(), lens(5, 3)));
  Polyhedron q = cube_twist(CubeTwist::Quarter);
  CHECK(isomorphic(q.mirrored(), q));
}

TEST_CASE("canonical form requires standardness") {
  Polyhedron q = cube_twist(CubeTwist::Quarter);
  Polyhedron sub = subdivide_edge_class(q, q.edge_classes().classes.front().labels.front());
  CHECK_THROWS_AS(sub.canonical_form(), NotStandardError);
  CHECK_THROWS_AS(isomorphic(sub, q), NotStandardError);
}
