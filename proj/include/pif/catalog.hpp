#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pif/errors.hpp"
#include "pif/moves.hpp"
#include "pif/quotient.hpp"
#include "pif/scheme.hpp"
#include "pif/surface_map.hpp"

namespace pif {

namespace detail {

// Offset of the pairing (A, B) realizing a vertex-level gluing map: side j
// of A, running a_j -> a_{j+1}, must land on the side of B running
// mu(a_{j+1}) -> mu(a_j).
inline int offset_from_vertex_map(const std::vector<int>& cyc_a, const std::vector<int>& cyc_b,
                                  const std::map<int, int>& mu, const std::string& context) {
  int m = static_cast<int>(cyc_a.size());
  int k = -1;
  for (int j = 0; j < m; ++j) {
    int u = mu.at(cyc_a[j]);
    int v = mu.at(cyc_a[(j + 1) % m]);
    int l = -1;
    for (int cand = 0; cand < m; ++cand) {
      if (cyc_b[cand] == v && cyc_b[(cand + 1) % m] == u) {
        l = cand;
        break;
      }
    }
    if (l == -1) throw InternalConsistencyError(context + ": gluing map does not send sides to sides");
    int cand_k = (l + j) % m;
    if (k == -1) k = cand_k;
    if (cand_k != k) throw InternalConsistencyError(context + ": gluing map is not an offset map");
  }
  return k;
}

}  // namespace detail

// --- lens polyhedra ---

// Two p-gons over an equator of p edges; the twist q steps edge j to j+q.
inline CellDividedBall lens_ball(int p) {
  if (p < 1) throw ParameterError("lens ball needs p >= 1");
  std::vector<FaceWord> faces(2);
  faces[0].name = "N";
  faces[1].name = "S";
  for (int j = 0; j < p; ++j) faces[0].word.push_back({"e" + std::to_string(j), true});
  for (int j = p - 1; j >= 0; --j) faces[1].word.push_back({"e" + std::to_string(j), false});
  return CellDividedBall::build(std::move(faces));
}

inline Polyhedron lens(int p, int q) {
  if (p < 1 || q < 0 || q >= p) throw ParameterError("lens(p, q) needs p >= 1 and 0 <= q < p");
  int offset = ((p - 1 - q) % p + p) % p;
  return Polyhedron(lens_ball(p), {{"N", "S", offset}},
                    "lens-" + std::to_string(p) + "-" + std::to_string(q));
}

// --- cube polyhedra ---

namespace detail {

// vertex v = 4x + 2y + z with coordinate bits (0 -> -1, 1 -> +1)
inline const std::vector<std::pair<FaceName, std::vector<int>>>& cube_cycles() {
  static const std::vector<std::pair<FaceName, std::vector<int>>> cycles = {
      {"xm", {3, 2, 0, 1}}, {"xp", {7, 5, 4, 6}}, {"ym", {5, 1, 0, 4}},
      {"yp", {7, 6, 2, 3}}, {"zm", {6, 4, 0, 2}}, {"zp", {7, 3, 1, 5}},
  };
  return cycles;
}

inline int cube_vertex(int x, int y, int z) { return 4 * x + 2 * y + z; }

// Gluing of face(+axis) onto face(-axis): rotate `quarters` right-handed
// quarter turns about the positive axis, then flip that coordinate.
inline std::map<int, int> cube_gluing(int axis, int quarters) {
  std::map<int, int> mu;
  for (int v = 0; v < 8; ++v) {
    int c[3] = {(v >> 2) & 1, (v >> 1) & 1, v & 1};
    int s[3] = {2 * c[0] - 1, 2 * c[1] - 1, 2 * c[2] - 1};
    int a = axis, b = (axis + 1) % 3, cc = (axis + 2) % 3;
    for (int t = 0; t < quarters; ++t) {
      int nb = -s[cc], ncc = s[b];  // right-handed rotation about +axis
      s[b] = nb;
      s[cc] = ncc;
    }
    s[a] = -s[a];
    int w = 4 * (s[0] > 0) + 2 * (s[1] > 0) + (s[2] > 0);
    mu[v] = w;
  }
  return mu;
}

}  // namespace detail

enum class CubeTwist { None, Quarter, Half };

inline Polyhedron cube_twist(CubeTwist kind) {
  const auto& cycles = detail::cube_cycles();
  CellDividedBall ball = ball_from_vertex_cycles(cycles);
  std::map<FaceName, std::vector<int>> cyc;
  for (const auto& [name, c] : cycles) cyc[name] = c;

  int quarters = kind == CubeTwist::None ? 0 : (kind == CubeTwist::Quarter ? 1 : 2);
  std::vector<FacePairing> pairings;
  const char* axes = "xyz";
  for (int axis = 0; axis < 3; ++axis) {
    FaceName a = std::string(1, axes[axis]) + "p";
    FaceName b = std::string(1, axes[axis]) + "m";
    auto mu = detail::cube_gluing(axis, quarters);
    pairings.push_back({a, b, detail::offset_from_vertex_map(cyc[a], cyc[b], mu, "cube " + a)});
  }
  std::string name = kind == CubeTwist::None ? "cube-none" : (kind == CubeTwist::Quarter ? "cube-quarter" : "cube-half");
  return Polyhedron(std::move(ball), std::move(pairings), name);
}

inline CellDividedBall cube_ball() { return ball_from_vertex_cycles(detail::cube_cycles()); }

// --- octahedron ball (search fixture) ---

inline CellDividedBall octahedron_ball() {
  // vertices: +x 0, -x 1, +y 2, -y 3, +z 4, -z 5
  std::vector<std::pair<FaceName, std::vector<int>>> cycles;
  for (int sx = 0; sx < 2; ++sx)
    for (int sy = 0; sy < 2; ++sy)
      for (int sz = 0; sz < 2; ++sz) {
        int X = sx ? 0 : 1, Y = sy ? 2 : 3, Z = sz ? 4 : 5;
        bool even = ((sx + sy + sz) % 2) == 1;  // product of signs positive
        std::vector<int> cycle = even ? std::vector<int>{X, Y, Z} : std::vector<int>{X, Z, Y};
        FaceName name = std::string("o") + (sx ? "p" : "m") + (sy ? "p" : "m") + (sz ? "p" : "m");
        cycles.push_back({name, cycle});
      }
  return ball_from_vertex_cycles(cycles);
}

// --- the dodecahedral space ---

namespace detail {

// t 0..4 top ring, u 5..9, w 10..14, b 15..19
inline const std::vector<std::pair<FaceName, std::vector<int>>>& dodecahedron_cycles() {
  static const std::vector<std::pair<FaceName, std::vector<int>>> cycles = [] {
    std::vector<std::pair<FaceName, std::vector<int>>> cs;
    auto t = [](int i) { return i % 5; };
    auto u = [](int i) { return 5 + i % 5; };
    auto w = [](int i) { return 10 + i % 5; };
    auto b = [](int i) { return 15 + i % 5; };
    std::vector<int> top, bot;
    for (int i = 0; i < 5; ++i) top.push_back(t(i));
    for (int i = 4; i >= 0; --i) bot.push_back(b(i));
    cs.push_back({"TOP", top});
    for (int i = 0; i < 5; ++i) cs.push_back({"U" + std::to_string(i), {t(i + 1), t(i), u(i), w(i), u(i + 1)}});
    for (int i = 0; i < 5; ++i) cs.push_back({"L" + std::to_string(i), {u(i + 1), w(i), b(i), b(i + 1), w(i + 1)}});
    cs.push_back({"BOT", bot});
    return cs;
  }();
  return cycles;
}

// central symmetry of the combinatorial dodecahedron
inline std::map<int, int> dodecahedron_antipode() {
  std::map<int, int> mu;
  for (int i = 0; i < 5; ++i) {
    mu[i] = 15 + (i + 2) % 5;       // t -> b
    mu[5 + i] = 10 + (i + 2) % 5;   // u -> w
    mu[10 + i] = 5 + (i + 3) % 5;   // w -> u
    mu[15 + i] = (i + 3) % 5;       // b -> t
  }
  return mu;
}

}  // namespace detail

// Dodecahedron with opposite faces identified through the minimal twist: the
// unique uniform gluing whose edge orbits all have cycle 3.
inline Polyhedron dodecahedral_space() {
  const auto& cycles = detail::dodecahedron_cycles();
  CellDividedBall ball = ball_from_vertex_cycles(cycles);
  std::map<FaceName, std::vector<int>> cyc;
  for (const auto& [name, c] : cycles) cyc[name] = c;

  auto mu = detail::dodecahedron_antipode();
  std::vector<std::pair<FaceName, FaceName>> pairs = {{"TOP", "BOT"}};
  for (int i = 0; i < 5; ++i) pairs.push_back({"U" + std::to_string(i), "L" + std::to_string((i + 2) % 5)});

  std::vector<int> base_offsets;
  for (const auto& [a, b] : pairs)
    base_offsets.push_back(detail::offset_from_vertex_map(cyc[a], cyc[b], mu, "dodecahedron " + a));

  // the antipode itself (shift 0) is the projective-space gluing; shifting
  // every pairing by the same corner step walks through the five uniform
  // twists, and exactly one mirror pair of shifts yields all cycle-3 orbits
  for (int shift = 0; shift < 5; ++shift) {
    std::vector<FacePairing> pairings;
    for (size_t i = 0; i < pairs.size(); ++i)
      pairings.push_back({pairs[i].first, pairs[i].second, (base_offsets[i] + shift) % 5});
    Polyhedron cand(ball, pairings, "dodecahedral");
    auto ec = cand.edge_classes();
    bool all3 = std::all_of(ec.classes.begin(), ec.classes.end(),
                            [](const EdgeClass& c) { return c.cycle() == 3; });
    if (all3) return cand;
  }
  throw InternalConsistencyError("no uniform dodecahedron twist has all edge cycles 3");
}

inline CellDividedBall dodecahedron_ball() { return ball_from_vertex_cycles(detail::dodecahedron_cycles()); }

// --- the annulus face-loop fixture ---

// A drum of 2n rectangles between two caps. Rectangles pair with their
// antipodes by the glide that swaps top and bottom, making the n rung
// classes cycle 2 and chaining the n rectangle cells into a loop; the cap
// pairing keeps every top/bottom edge in one long orbit.
inline Polyhedron annulus_loop(int n) {
  if (n < 2) throw ParameterError("annulus_loop needs n >= 2");
  const int ring = 2 * n;
  auto u = [&](int i) { return ((i % ring) + ring) % ring; };
  auto w = [&](int i) { return ring + ((i % ring) + ring) % ring; };

  std::vector<std::pair<FaceName, std::vector<int>>> cycles;
  std::vector<int> capn, caps;
  for (int i = 0; i < ring; ++i) capn.push_back(u(i));
  for (int i = ring - 1; i >= 0; --i) caps.push_back(w(i));
  cycles.push_back({"CN", capn});
  cycles.push_back({"CS", caps});
  for (int i = 0; i < ring; ++i) cycles.push_back({"R" + std::to_string(i), {u(i), w(i), w(i + 1), u(i + 1)}});

  CellDividedBall ball = ball_from_vertex_cycles(cycles);
  std::map<FaceName, std::vector<int>> cyc;
  for (const auto& [name, c] : cycles) cyc[name] = c;

  std::vector<FacePairing> pairings;
  for (int i = 0; i < n; ++i) {
    std::map<int, int> mu;  // glide: swap top and bottom, step n around the ring
    for (int j = 0; j < ring; ++j) {
      mu[u(j)] = w(j + n);
      mu[w(j)] = u(j + n);
    }
    FaceName a = "R" + std::to_string(i), b = "R" + std::to_string(i + n);
    pairings.push_back({a, b, detail::offset_from_vertex_map(cyc[a], cyc[b], mu, "annulus rect " + a)});
  }
  {
    std::map<int, int> mu;  // caps glue with a step that keeps t/b orbits long
    for (int j = 0; j < ring; ++j) {
      mu[u(j)] = w(j + n + 1);
      mu[w(j)] = u(j - n - 1);
    }
    pairings.push_back({"CN", "CS", detail::offset_from_vertex_map(cyc["CN"], cyc["CS"], mu, "annulus caps")});
  }
  return Polyhedron(std::move(ball), std::move(pairings), "annulus-loop-" + std::to_string(n));
}

// --- scheme census over a ball ---

struct SearchLimits {
  long long max_schemes = 100000;
  unsigned long long seed = 0;
};

struct SchemeRecord {
  long long rank = 0;  // position in the full enumeration
  std::vector<FacePairing> pairings;
  bool manifold = false;
  bool distinguished = false;
  int chi_q = 0;
  int singular_count = 0;
  std::array<int, 4> betti{};
  std::vector<long long> h1_torsion;
};

struct SearchReport {
  std::string ball_description;
  long long total_schemes = 0;
  long long evaluated = 0;
  bool limit_exceeded = false;
  unsigned long long seed = 0;
  long long manifold_count = 0;
  long long distinguished_count = 0;
  std::vector<SchemeRecord> schemes;  // ascending rank
};

namespace detail {

inline void enumerate_matchings(const std::vector<int>& sides, std::vector<int>& taken,
                                std::vector<std::pair<int, int>>& current,
                                std::vector<std::vector<std::pair<int, int>>>& out) {
  int first = -1;
  for (int i = 0; i < static_cast<int>(taken.size()); ++i)
    if (!taken[i]) {
      first = i;
      break;
    }
  if (first == -1) {
    out.push_back(current);
    return;
  }
  taken[first] = 1;
  for (int j = first + 1; j < static_cast<int>(taken.size()); ++j) {
    if (taken[j] || sides[j] != sides[first]) continue;
    taken[j] = 1;
    current.push_back({first, j});
    enumerate_matchings(sides, taken, current, out);
    current.pop_back();
    taken[j] = 0;
  }
  taken[first] = 0;
}

}  // namespace detail

// Enumerates all perfect matchings of equal-sided faces and all offset
// tuples; classifies each scheme. Deterministic: full enumeration order, or
// a seeded sorted sample when the census exceeds the limit.
inline SearchReport search_schemes(const CellDividedBall& ball, const SearchLimits& limits = {}) {
  if (ball.face_count() % 2 != 0)
    throw OddFaceCountError("census needs an even number of faces, got " + std::to_string(ball.face_count()));

  std::vector<int> sides;
  for (int f = 0; f < ball.face_count(); ++f) sides.push_back(ball.face_sides(f));

  std::vector<std::vector<std::pair<int, int>>> matchings;
  {
    std::vector<int> taken(ball.face_count(), 0);
    std::vector<std::pair<int, int>> current;
    detail::enumerate_matchings(sides, taken, current, matchings);
  }

  SearchReport rep;
  rep.seed = limits.seed;
  {
    std::string desc;
    for (int f = 0; f < ball.face_count(); ++f) {
      if (f) desc += " ";
      desc += ball.face(f).name + "(" + std::to_string(ball.face_sides(f)) + ")";
    }
    rep.ball_description = desc;
  }

  std::vector<long long> matching_sizes;
  for (const auto& m : matchings) {
    long long size = 1;
    for (auto [a, b] : m) size *= sides[a];
    matching_sizes.push_back(size);
    rep.total_schemes += size;
  }

  std::vector<long long> ranks;
  if (rep.total_schemes <= limits.max_schemes) {
    ranks.resize(rep.total_schemes);
    for (long long r = 0; r < rep.total_schemes; ++r) ranks[r] = r;
  } else {
    rep.limit_exceeded = true;
    std::mt19937_64 rng(limits.seed);
    std::set<long long> sample;
    std::uniform_int_distribution<long long> dist(0, rep.total_schemes - 1);
    while (static_cast<long long>(sample.size()) < limits.max_schemes) sample.insert(dist(rng));
    ranks.assign(sample.begin(), sample.end());
  }
  rep.evaluated = static_cast<long long>(ranks.size());

  size_t mi = 0;
  long long base = 0;
  for (long long rank : ranks) {
    while (mi < matchings.size() && rank >= base + matching_sizes[mi]) base += matching_sizes[mi++];
    const auto& matching = matchings[mi];
    long long rem = rank - base;
    std::vector<FacePairing> pairings;
    for (auto [a, b] : matching) {
      int m = sides[a];
      pairings.push_back({ball.face(a).name, ball.face(b).name, static_cast<int>(rem % m)});
      rem /= m;
    }
    Polyhedron p(ball, pairings);
    SchemeRecord rec;
    rec.rank = rank;
    rec.pairings = p.pairings();
    rec.chi_q = chi_quotient(p);
    ManifoldReport mf = is_manifold(p);
    rec.manifold = mf.manifold;
    rec.singular_count = static_cast<int>(mf.singular_classes.size());
    HomologyResult h = homology(p);
    rec.betti = h.betti;
    rec.h1_torsion = h.torsion;
    Polyhedron std_form = p.is_standard() ? p : p.standard_form();
    rec.distinguished = is_distinguished(std_form);
    if (rec.distinguished && !rec.manifold)
      throw InternalConsistencyError("census: distinguished scheme is not a manifold");
    rep.manifold_count += rec.manifold;
    rep.distinguished_count += rec.distinguished;
    rep.schemes.push_back(std::move(rec));
  }
  return rep;
}

// --- seeded random insertions (move-property fixture generator) ---

inline Polyhedron random_insertions(const Polyhedron& start, int count, unsigned long long seed) {
  if (count < 0) throw ParameterError("random_insertions needs count >= 0");
  std::mt19937_64 rng(seed);
  Polyhedron p = start;
  for (int step = 0; step < count; ++step) {
    const CellDividedBall& ball = p.ball();
    std::vector<int> chordable;
    for (int f = 0; f < ball.face_count(); ++f)
      if (ball.face_sides(f) >= 2) chordable.push_back(f);

    bool chord = !chordable.empty() && (rng() % 10) < 7;
    if (chord) {
      int f = chordable[rng() % chordable.size()];
      int m = ball.face_sides(f);
      int i = static_cast<int>(rng() % m);
      int j = static_cast<int>(rng() % (m - 1));
      if (j >= i) ++j;
      p = insert_chord(p, ball.face(f).name, i, j);
    } else {
      int f = static_cast<int>(rng() % ball.face_count());
      int m = ball.face_sides(f);
      if ((rng() % 10) < 7) {
        p = insert_dangling(p, ball.face(f).name, AttachAtCorner{static_cast<int>(rng() % m)});
      } else {
        const auto& sl = ball.face(f).word[rng() % m];
        p = insert_dangling(p, ball.face(f).name, AttachOnEdge{sl.label});
      }
    }
  }
  return p;
}

// --- name-based lookup used by the CLI ---

inline std::optional<Polyhedron> catalog_polyhedron(const std::string& name) {
  if (name.rfind("lens-", 0) == 0) {
    auto rest = name.substr(5);
    auto dash = rest.find('-');
    if (dash == std::string::npos) return std::nullopt;
    try {
      int p = std::stoi(rest.substr(0, dash));
      int q = std::stoi(rest.substr(dash + 1));
      return lens(p, q);
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    } catch (const std::out_of_range&) {
      return std::nullopt;
    }
  }
  if (name == "cube-none") return cube_twist(CubeTwist::None);
  if (name == "cube-quarter") return cube_twist(CubeTwist::Quarter);
  if (name == "cube-half") return cube_twist(CubeTwist::Half);
  if (name == "dodecahedral") return dodecahedral_space();
  if (name.rfind("annulus-loop-", 0) == 0) {
    try {
      return annulus_loop(std::stoi(name.substr(13)));
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    } catch (const std::out_of_range&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

inline std::optional<CellDividedBall> catalog_ball(const std::string& name) {
  if (name.rfind("lens-ball-", 0) == 0) {
    try {
      return lens_ball(std::stoi(name.substr(10)));
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    } catch (const std::out_of_range&) {
      return std::nullopt;
    }
  }
  if (name == "cube-ball") return cube_ball();
  if (name == "octahedron-ball") return octahedron_ball();
  if (name == "dodecahedron-ball") return dodecahedron_ball();
  return std::nullopt;
}

}  // namespace pif
