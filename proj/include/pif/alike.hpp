#pragma once

#include <string>

#include "pif/moves.hpp"
#include "pif/quotient.hpp"

namespace pif {

enum class AlikeVerdict { Alike, NotAlike, Undecided };

struct AlikeResult {
  AlikeVerdict verdict = AlikeVerdict::Undecided;
  std::string reason;
  MinimizeResult left;
  MinimizeResult right;
};

// Alikeness test: minimize both sides and compare. Non-isomorphic minima or
// differing quotient invariants rule alikeness out; isomorphic reduced forms
// prove it even when a side got stuck (isomorphic polyhedra are alike).
inline AlikeResult alike(const Polyhedron& p, const Polyhedron& q) {
  AlikeResult res{AlikeVerdict::Undecided, "", minimize(p), minimize(q)};

  if (chi_quotient(p) != chi_quotient(q)) {
    res.verdict = AlikeVerdict::NotAlike;
    res.reason = "chi_quotient differs";
    return res;
  }
  HomologyResult hp = homology(p), hq = homology(q);
  if (hp.betti != hq.betti || hp.torsion != hq.torsion) {
    res.verdict = AlikeVerdict::NotAlike;
    res.reason = "homology differs";
    return res;
  }

  const bool both_minimum = res.left.outcome == MinimizeResult::Outcome::Minimum &&
                            res.right.outcome == MinimizeResult::Outcome::Minimum;
  if (both_minimum) {
    ScarComplex sl = scar_complex(res.left.result);
    ScarComplex sr = scar_complex(res.right.result);
    if (sl.vq() != sr.vq() || sl.eq() != sr.eq() || sl.fq() != sr.fq()) {
      res.verdict = AlikeVerdict::NotAlike;
      res.reason = "scar cell counts of the minima differ";
      return res;
    }
    std::multiset<int> cl, cr;
    for (const auto& c : sl.edges.classes) cl.insert(c.cycle());
    for (const auto& c : sr.edges.classes) cr.insert(c.cycle());
    if (cl != cr) {
      res.verdict = AlikeVerdict::NotAlike;
      res.reason = "edge-cycle multisets of the minima differ";
      return res;
    }
    bool iso = isomorphic(res.left.result, res.right.result);
    res.verdict = iso ? AlikeVerdict::Alike : AlikeVerdict::NotAlike;
    res.reason = iso ? "minima are isomorphic" : "minima are not isomorphic";
    return res;
  }

  // at least one reduction did not reach a minimum
  if (isomorphic(res.left.result, res.right.result)) {
    res.verdict = AlikeVerdict::Alike;
    res.reason = "reduced forms are isomorphic";
    return res;
  }
  res.verdict = AlikeVerdict::Undecided;
  res.reason = "reductions did not reach comparable minima; invariants agree";
  return res;
}

}  // namespace pif
