#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "pif/alike.hpp"
#include "pif/catalog.hpp"
#include "pif/moves.hpp"
#include "pif/quotient.hpp"

using namespace pif;

namespace {

struct Fingerprint {
  int chi_q;
  std::array<int, 4> betti;
  std::vector<long long> torsion;
  bool manifold;
  int c2, c1, c0;
};

Fingerprint fingerprint(const Polyhedron& p) {
  HomologyResult h = homology(p);
  ComponentsResult c = components(p);
  return {chi_quotient(p), h.betti, h.torsion, is_manifold(p).manifold, c.count(2), c.count(1), c.count(0)};
}

bool operator==(const Fingerprint& a, const Fingerprint& b) {
  return a.chi_q == b.chi_q && a.betti == b.betti && a.torsion == b.torsion && a.manifold == b.manifold &&
         a.c2 == b.c2 && a.c1 == b.c1 && a.c0 == b.c0;
}

}  // namespace

TEST_CASE("chord insertion splits the lens face as expected") {
  Polyhedron l = lens(5, 2);
  Polyhedron chorded = insert_chord(l, "N", 0, 2);
  std::vector<int> sizes;
  for (const auto& fw : chorded.ball().faces()) sizes.push_back(static_cast<int>(fw.word.size()));
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>{3, 3, 4, 4});
  CHECK(chorded.pairings().size() == 2);

  // the new class has cycle 2
  auto ec = chorded.edge_classes();
  std::multiset<int> cycles;
  for (const auto& c : ec.classes) cycles.insert(c.cycle());
  CHECK(cycles == std::multiset<int>{2, 5});
}

TEST_CASE("chord insertion preserves the quotient invariants") {
  for (const Polyhedron& p : {lens(3, 1), lens(5, 2), cube_twist(CubeTwist::Quarter)}) {
    Fingerprint before = fingerprint(p);
    const auto& ball = p.ball();
    for (int f = 0; f < ball.face_count(); ++f) {
      int m = ball.face_sides(f);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          if (i == j) continue;
          Polyhedron moved = insert_chord(p, ball.face(f).name, i, j);
          CHECK(fingerprint(moved) == before);
        }
    }
  }
}

TEST_CASE("chord rejects degenerate input") {
  Polyhedron l = lens(5, 2);
  CHECK_THROWS_AS(insert_chord(l, "Q", 0, 1), UnknownFaceError);
  CHECK_THROWS_AS(insert_chord(l, "N", 2, 2), DegenerateChordError);
  CHECK_THROWS_AS(insert_chord(l, "N", 0, 7), DegenerateChordError);
}

TEST_CASE("chord round trip returns the original") {
  Polyhedron q = cube_twist(CubeTwist::Quarter);
  Polyhedron chorded = insert_chord(q, "yp", 1, 3);
  auto ec = chorded.edge_classes();
  Label chord;
  for (const auto& c : ec.classes)
    if (c.cycle() == 2) chord = c.labels.front();
  REQUIRE(!chord.empty());
  Polyhedron back = remove_cycle2(chorded, chord);
  CHECK(isomorphic(back, q));
}

TEST_CASE("dangling insertion at a corner and its round trip") {
  Polyhedron q = cube_twist(CubeTwist::Quarter);
  Polyhedron dangled = insert_dangling(q, "zm", AttachAtCorner{2});
  CHECK(dangled.ball().edge_count() == 14);
  CHECK(dangled.ball().vertex_count() == 10);

  // the free endpoints have degree 1 and form one class of order 2
  auto vc = dangled.vertex_classes();
  int deg1 = 0;
  for (int v = 0; v < dangled.ball().vertex_count(); ++v)
    if (dangled.ball().vertex_degree(v) == 1) {
      ++deg1;
      CHECK(vc.classes[vc.class_of[v]].order() == 2);
    }
  CHECK(deg1 == 2);

  CHECK(fingerprint(dangled) == fingerprint(q));

  auto ec = dangled.edge_classes();
  Label spur;
  for (const auto& c : ec.classes)
    if (c.cycle() == 2) spur = c.labels.front();
  REQUIRE(!spur.empty());
  CHECK(isomorphic(remove_cycle2(dangled, spur), q));
}

TEST_CASE("dangling insertion on an edge interior subdivides its class first") {
  Polyhedron l = lens(5, 2);
  Polyhedron dangled = insert_dangling(l, "N", AttachOnEdge{"e0"});
  // the 5-edge class was subdivided (10 halves) and the spur added 2 edges
  CHECK(dangled.ball().edge_count() == 12);
  CHECK(fingerprint(dangled) == fingerprint(l));
  // removing the spur re-standardizes back to the original
  auto ec = dangled.edge_classes();
  for (const auto& c : ec.classes) {
    if (c.cycle() != 2) continue;
    Polyhedron back = remove_cycle2(dangled, c.labels.front());
    CHECK(isomorphic(back, l));
  }
}

TEST_CASE("removal rejects non-cycle-2 classes and unknown labels") {
  Polyhedron q = cube_twist(CubeTwist::Quarter);
  CHECK_THROWS_AS(remove_cycle2(q, "e0"), NotCycle2Error);
  CHECK_THROWS_AS(remove_cycle2(q, "nope"), UnknownLabelError);
}

TEST_CASE("removing the last equator class of a lens is impossible") {
  CHECK_THROWS_AS(remove_cycle2(lens(2, 1), "e0"), DisconnectError);
}

TEST_CASE("essential graph contents") {
  Polyhedron q = cube_twist(CubeTwist::Quarter);
  EssentialGraph g = essential_graph(q);
  CHECK(g.labels.size() == 12);
  CHECK(!g.empty);
  CHECK(g.connected);

  Polyhedron chorded = insert_chord(q, "xm", 0, 2);
  EssentialGraph g2 = essential_graph(chorded);
  CHECK(g2.labels.size() == 12);  // everything except the chord pair

  EssentialGraph g3 = essential_graph(lens(2, 1));
  CHECK(g3.empty);
  CHECK_FALSE(g3.connected);
}

TEST_CASE("minimize recovers the quarter cube from seeded insertions") {
  Polyhedron q = cube_twist(CubeTwist::Quarter);
  Polyhedron enriched = random_insertions(q, 5, 17);
  MinimizeResult mr = minimize(enriched);
  REQUIRE(mr.outcome == MinimizeResult::Outcome::Minimum);
  CHECK(isomorphic(mr.result, q));
  CHECK(mr.removal_trace.size() >= 5);

  // idempotence
  MinimizeResult again = minimize(mr.result);
  CHECK(again.outcome == MinimizeResult::Outcome::Minimum);
  CHECK(again.removal_trace.empty());
  CHECK(isomorphic(again.result, mr.result));
}

TEST_CASE("minimize outcomes on the degenerate fixtures") {
  MinimizeResult lens_min = minimize(lens(2, 1));
  CHECK(lens_min.outcome == MinimizeResult::Outcome::GammaEmpty);
  CHECK(!lens_min.blocked.empty());

  MinimizeResult annulus = minimize(annulus_loop(2));
  CHECK(annulus.outcome == MinimizeResult::Outcome::Stuck);
  REQUIRE(annulus.blocked.size() == 1);
  // the surviving loop class cannot be removed: its edges disconnect the graph
  CHECK_THROWS_AS(remove_cycle2(annulus.result, annulus.blocked[0][0]), DisconnectError);

  MinimizeResult annulus3 = minimize(annulus_loop(3));
  CHECK(annulus3.outcome == MinimizeResult::Outcome::Stuck);
}

TEST_CASE("minimize agrees when run in the reverse removal order") {
  for (const Polyhedron& p : {random_insertions(cube_twist(CubeTwist::Quarter), 6, 3),
                              random_insertions(lens(5, 2), 4, 9), annulus_loop(2), lens(2, 1)}) {
    MinimizeResult fwd = minimize(p);
    MinimizeResult rev = minimize(p, true);
    CHECK(fwd.outcome == rev.outcome);
    if (fwd.outcome == MinimizeResult::Outcome::Minimum) CHECK(isomorphic(fwd.result, rev.result));
  }
}

TEST_CASE("is_distinguished matches the catalog") {
  CHECK(is_distinguished(cube_twist(CubeTwist::Quarter)));
  CHECK(is_distinguished(dodecahedral_space()));
  CHECK_FALSE(is_distinguished(cube_twist(CubeTwist::None)));
  CHECK_FALSE(is_distinguished(lens(3, 1)));
  Polyhedron sub = subdivide_edge_class(cube_twist(CubeTwist::Quarter), "e0");
  CHECK_THROWS_AS(is_distinguished(sub), NotStandardError);
}

TEST_CASE("alike verdicts") {
  Polyhedron q = cube_twist(CubeTwist::Quarter);
  AlikeResult same = alike(q, random_insertions(q, 3, 5));
  CHECK(same.verdict == AlikeVerdict::Alike);

  AlikeResult diff = alike(q, cube_twist(CubeTwist::None));
  CHECK(diff.verdict == AlikeVerdict::NotAlike);

  // both reduce to the Gamma-empty projective-space polyhedron; isomorphic
  // reduced forms settle it
  Polyhedron rp = lens(2, 1);
  AlikeResult fallback = alike(rp, insert_chord(rp, "N", 0, 1));
  CHECK(fallback.verdict == AlikeVerdict::Alike);

  AlikeResult lens_pair = alike(lens(5, 1), lens(5, 2));
  CHECK(lens_pair.verdict == AlikeVerdict::NotAlike);
}

TEST_CASE("random_insertions is deterministic and count 0 is the identity") {
  Polyhedron q = cube_twist(CubeTwist::Quarter);
  CHECK(isomorphic(random_insertions(q, 0, 1), q));
  Polyhedron a = random_insertions(q, 6, 42);
  Polyhedron b = random_insertions(q, 6, 42);
  CHECK(a.ball().edge_count() == b.ball().edge_count());
  CHECK(isomorphic(a.standard_form(), b.standard_form()));
}

TEST_CASE("moves preserve invariants along random sequences") {
  for (unsigned long long seed : {1ull, 2ull, 3ull}) {
    for (const Polyhedron& start : {cube_twist(CubeTwist::Half), lens(7, 2)}) {
      Fingerprint base = fingerprint(start);
      Polyhedron p = random_insertions(start, 4, seed);
      CHECK(fingerprint(p) == base);
      // and one removal on top
      auto ec = p.edge_classes();
      for (const auto& c : ec.classes) {
        if (c.cycle() != 2) continue;
        try {
          Polyhedron r = remove_cycle2(p, c.labels.front());
          CHECK(fingerprint(r) == base);
        } catch (const DisconnectError&) {
        } catch (const SelfMergeError&) {
        }
        break;
      }
    }
  }
}
