// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins its expected values exactly; the time bounds
// are part of the contract and are enforced.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "pif/alike.hpp"
#include "pif/catalog.hpp"
#include "pif/moves.hpp"
#include "pif/pif_format.hpp"
#include "pif/quotient.hpp"
#include "pif/report.hpp"

using namespace pif;

namespace {

int failures = 0;

struct Criterion {
  std::string name;
  double time_budget_seconds;
  std::function<void(std::ostream&)> body;  // throws or writes "FAIL:" lines on failure
};

class CheckFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw CheckFailure(what);
}

// criterion 8 is a standing obligation: run it on every instance any other
// criterion constructs
void global_invariants(const Polyhedron& p) {
  ScarComplex s = scar_complex(p);
  require(s.chi() == chi_quotient(p) + 1, "chi(scar) != chi_q + 1");
  int cycles = 0;
  for (const auto& c : s.edges.classes) cycles += c.cycle();
  require(cycles == p.ball().edge_count(), "sum of cycles != E");
  int orders = 0;
  for (const auto& c : s.vertices.classes) orders += c.order();
  require(orders == p.ball().vertex_count(), "sum of orders != V");
  require(is_involution(p.side_map_table()), "side map is not involutive");
  int genus_sum = 0;
  for (const auto& l : vertex_links(p)) genus_sum += l.genus;
  require(genus_sum == chi_quotient(p), "chi_q != sum of link genera");
  homology(p);  // verifies d1.d2 = 0 and the face-cell cancellation
}

long long instances_checked = 0;

void track(const Polyhedron& p) {
  global_invariants(p);
  ++instances_checked;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  criteria.push_back({"1 lens family classification", 1.0, [](std::ostream& log) {
    for (int p = 1; p <= 12; ++p) {
      for (int q = 0; q < std::max(1, p); ++q) {
        bool in_family = (p == 1 && q == 0) || (q > 0 && std::gcd(p, q) == 1);
        if (!in_family) continue;
        Polyhedron l = lens(p, q);
        track(l);
        ClassifyReport r = classify(l);
        require(r.manifold, "lens not a manifold");
        // hand oracle: the single face relation abelianizes to p*e
        std::vector<long long> expected;
        if (p >= 2) expected.push_back(p);
        require(r.hom.torsion == expected, "H1 torsion != [p] for lens(" + std::to_string(p) + "," +
                                               std::to_string(q) + ")");
        require(r.hom.betti[1] == 0 && r.hom.betti[2] == 0, "lens H1/H2 free parts must vanish");
        require(r.hom.torsion_h2.empty(), "lens H2 torsion must vanish");
        require(r.hom.betti[3] == 1, "lens H3 != Z");
        log << "";
      }
    }
  }});

  criteria.push_back({"2 cube suite", 5.0, [](std::ostream&) {
    Polyhedron t = cube_twist(CubeTwist::None);
    track(t);
    ClassifyReport rt = classify(t);
    require(rt.chi_q == 0, "translation cube chi_q != 0");
    require(rt.hom.betti == std::array<int, 4>{1, 3, 3, 1} && rt.hom.torsion.empty(),
            "translation cube homology != (Z, Z^3, Z^3, Z)");

    Polyhedron h = cube_twist(CubeTwist::Half);
    track(h);
    ClassifyReport rh = classify(h);
    require(rh.hom.betti[1] == 0 && rh.hom.torsion == std::vector<long long>{2}, "half-twist cube H1 != Z/2");

    Polyhedron q = cube_twist(CubeTwist::Quarter);
    track(q);
    ClassifyReport rq = classify(q);
    require(rq.distinguished, "quarter-twist cube not distinguished");
    require(rq.special, "quarter-twist cube not special");
    require(rq.hom.betti[1] == 0 && rq.hom.torsion == std::vector<long long>({2, 2}),
            "quarter-twist cube H1 != Z/2 + Z/2");
  }});

  criteria.push_back({"3 dodecahedral space", 5.0, [](std::ostream&) {
    Polyhedron d = dodecahedral_space();
    track(d);
    ClassifyReport r = classify(d);
    require(r.distinguished, "not distinguished");
    require(r.chi_q == 0, "chi_q != 0");
    require(r.hom.betti[1] == 0 && r.hom.torsion.empty(), "H1 != 0");
    require(r.hom.betti[3] == 1, "H3 != Z");
    require(r.edge_cycles == std::vector<int>(10, 3), "edge classes != 10 of cycle 3");
    require(r.vertex_orders == std::vector<int>(5, 4), "vertex classes != 5 of order 4");
  }});

  criteria.push_back({"4 census: distinguished schemes are manifolds", 60.0, [](std::ostream& log) {
    long long total = 0, distinguished = 0;
    auto run_census = [&](const CellDividedBall& ball) {
      SearchReport rep = search_schemes(ball, {100000, 0});
      require(!rep.limit_exceeded, "census exceeded the scheme bound");
      total += rep.evaluated;
      for (const auto& rec : rep.schemes) {
        if (!rec.distinguished) continue;
        ++distinguished;
        require(rec.chi_q == 0, "distinguished scheme with chi_q != 0");
        require(rec.manifold && rec.singular_count == 0, "distinguished scheme with a singular link");
      }
    };
    for (int p = 1; p <= 6; ++p) run_census(lens_ball(p));
    run_census(octahedron_ball());
    run_census(cube_ball());
    require(distinguished > 0, "census found no distinguished schemes at all");
    log << "schemes=" << total << " distinguished=" << distinguished << " ";
  }});

  criteria.push_back({"5 census: singularities sit at vertex links of genus >= 1", 60.0, [](std::ostream& log) {
    long long nonmanifold = 0;
    auto run_census = [&](const CellDividedBall& ball) {
      SearchReport rep = search_schemes(ball, {100000, 0});
      for (const auto& rec : rep.schemes) {
        if (rec.manifold) continue;
        ++nonmanifold;
        require(rec.singular_count >= 1, "non-manifold scheme without singular vertex classes");
        // reconstruct and confirm: every singularity is a vertex class of
        // genus >= 1 and no edge or face cell carries a bad model
        Polyhedron p(ball, rec.pairings);
        ManifoldReport mf = is_manifold(p);
        require(!mf.singular_classes.empty(), "is_manifold lost the singularities");
        for (int cls : mf.singular_classes) require(mf.link_genera[cls] >= 1, "singular class of genus 0");
        ScarModels models = scar_models(p);
        for (const auto& lm : models.face_models)
          require(lm.kind == LocalModelKind::Disk, "face cell with a non-disk model");
        for (const auto& lm : models.edge_models)
          require(lm.kind == LocalModelKind::Disk || lm.kind == LocalModelKind::HalfDisks,
                  "edge cell with a singular model");
      }
    };
    for (int p = 1; p <= 6; ++p) run_census(lens_ball(p));
    run_census(octahedron_ball());
    run_census(cube_ball());
    require(nonmanifold > 0, "census contains no pseudomanifold schemes");
    log << "nonmanifold=" << nonmanifold << " ";
  }});

  criteria.push_back({"6 moves preserve the quotient invariants", 120.0, [](std::ostream& log) {
    std::vector<Polyhedron> entries = {lens(1, 0),
                                       lens(2, 1),
                                       lens(5, 2),
                                       cube_twist(CubeTwist::None),
                                       cube_twist(CubeTwist::Quarter),
                                       cube_twist(CubeTwist::Half),
                                       dodecahedral_space(),
                                       annulus_loop(2)};
    long long sequences = 0;
    for (const Polyhedron& start : entries) {
      track(start);
      HomologyResult h0 = homology(start);
      int chi0 = chi_quotient(start);
      bool manifold0 = is_manifold(start).manifold;
      ComponentsResult c0 = components(start);
      for (unsigned long long seed = 0; seed < 100; ++seed) {
        Polyhedron p = random_insertions(start, 3, seed);
        // interleave a removal when one is available
        auto ec = p.edge_classes();
        for (const auto& c : ec.classes) {
          if (c.cycle() != 2) continue;
          try {
            p = remove_cycle2(p, c.labels.front());
          } catch (const Error&) {
          }
          break;
        }
        HomologyResult h = homology(p);
        require(h.betti == h0.betti && h.torsion == h0.torsion, "homology changed under moves");
        require(chi_quotient(p) == chi0, "chi_q changed under moves");
        require(is_manifold(p).manifold == manifold0, "manifold flag changed under moves");
        ComponentsResult c = components(p);
        require(c.count(2) == c0.count(2) && c.count(1) == c0.count(1) && c.count(0) == c0.count(0),
                "component counts changed under moves");
        ++sequences;
      }
    }
    log << "sequences=" << sequences << " ";
  }});

  criteria.push_back({"7 minimize recovers the distinguished originals", 30.0, [](std::ostream& log) {
    int runs = 0;
    for (const Polyhedron& original : {cube_twist(CubeTwist::Quarter), dodecahedral_space()}) {
      for (unsigned long long seed = 0; seed < 100; ++seed) {
        Polyhedron enriched = random_insertions(original, 1 + static_cast<int>(seed % 10), seed);
        MinimizeResult mr = minimize(enriched);
        require(mr.outcome == MinimizeResult::Outcome::Minimum, "minimize did not reach a Minimum");
        require(isomorphic(mr.result, original), "minimum is not the original polyhedron");
        ++runs;
      }
    }
    require(runs == 200, "wrong trial count");
    log << "recoveries=" << runs << " ";
  }});

  criteria.push_back({"8 global invariants on every constructed instance", 1.0, [](std::ostream& log) {
    require(instances_checked > 0, "no instances were tracked");
    // spot-check a fresh batch, including a pseudomanifold
    Polyhedron octa(octahedron_ball(),
                    {{"ommm", "ommp", 0}, {"ompm", "ompp", 0}, {"opmm", "opmp", 0}, {"oppm", "oppp", 0}});
    track(octa);
    for (int p = 2; p <= 6; ++p) track(lens(p, 1));
    track(annulus_loop(3));
    log << "instances=" << instances_checked << " ";
  }});

  criteria.push_back({"9 round trips and idempotence", 30.0, [](std::ostream&) {
    for (const Polyhedron& p : {lens(5, 2), cube_twist(CubeTwist::Quarter), dodecahedral_space(),
                                annulus_loop(2), lens(2, 1)}) {
      std::string text = serialize(p);
      require(serialize(parse(text)) == text, "serialize is not a fixed point");
      require(isomorphic(parse(text).standard_form(), p.standard_form()),
              "parse(serialize(p)) is not isomorphic to p");
      Polyhedron s = p.standard_form();
      require(isomorphic(s.standard_form(), s), "standard_form is not idempotent");
      MinimizeResult mr = minimize(p);
      MinimizeResult mr2 = minimize(mr.result);
      require(mr2.outcome == mr.outcome || mr.outcome == MinimizeResult::Outcome::Minimum,
              "minimize outcome unstable");
      require(mr2.removal_trace.empty(), "minimize is not idempotent");
    }
    // enriched round trip through the text format
    Polyhedron enriched = random_insertions(cube_twist(CubeTwist::Quarter), 4, 11);
    require(isomorphic(parse(serialize(enriched)).standard_form(), enriched.standard_form()),
            "enriched parse/serialize round trip failed");
  }});

  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::ostringstream log;
    std::string error;
    try {
      c.body(log);
    } catch (const CheckFailure& e) {
      error = e.what();
    } catch (const std::exception& e) {
      error = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (error.empty() && secs > c.time_budget_seconds) {
      std::ostringstream o;
      o << "exceeded time budget (" << secs << "s > " << c.time_budget_seconds << "s)";
      error = o.str();
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    if (error.empty()) {
      std::cout << "[PASS] criterion " << c.name << " (" << log.str() << timing << ")\n";
    } else {
      std::cout << "[FAIL] criterion " << c.name << ": " << error << " (" << timing << ")\n";
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}
