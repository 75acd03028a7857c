#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pif/moves.hpp"
#include "pif/quotient.hpp"
#include "pif/scheme.hpp"

namespace pif {

inline constexpr const char* kReportSchemaVersion = "1";

struct ClassifyReport {
  std::string name;
  int V = 0, E = 0, F = 0;
  int V_q = 0, E_q = 0, F_q = 0;
  int chi_q = 0, chi_scar = 0;
  std::vector<int> edge_cycles;    // ascending
  std::vector<int> vertex_orders;  // ascending
  bool manifold = false;
  std::vector<int> singularities;  // singular vertex class indices
  std::vector<int> link_genera;
  HomologyResult hom;
  bool simple = false, cellular = false, special = false, distinguished = false;
};

inline ClassifyReport classify(const Polyhedron& p) {
  ClassifyReport r;
  r.name = p.name();
  const CellDividedBall& ball = p.ball();
  r.V = ball.vertex_count();
  r.E = ball.edge_count();
  r.F = ball.face_count();
  ScarComplex s = scar_complex(p);
  r.V_q = s.vq();
  r.E_q = s.eq();
  r.F_q = s.fq();
  r.chi_scar = s.chi();
  r.chi_q = r.chi_scar - 1;
  for (const auto& c : s.edges.classes) r.edge_cycles.push_back(c.cycle());
  for (const auto& c : s.vertices.classes) r.vertex_orders.push_back(c.order());
  std::sort(r.edge_cycles.begin(), r.edge_cycles.end());
  std::sort(r.vertex_orders.begin(), r.vertex_orders.end());
  ManifoldReport mf = is_manifold(p);
  r.manifold = mf.manifold;
  r.singularities = mf.singular_classes;
  r.link_genera = mf.link_genera;
  r.hom = homology(p);
  r.simple = is_simple(p);
  r.cellular = is_cellular(p);
  r.special = is_special(p);
  r.distinguished = is_distinguished(p.is_standard() ? p : p.standard_form());
  return r;
}

inline nlohmann::json to_json(const ClassifyReport& r) {
  nlohmann::json j;
  j["schema_version"] = kReportSchemaVersion;
  j["name"] = r.name;
  j["counts"] = {{"V", r.V}, {"E", r.E}, {"F", r.F}, {"V_q", r.V_q}, {"E_q", r.E_q}, {"F_q", r.F_q}};
  j["chi_quotient"] = r.chi_q;
  j["chi_scar"] = r.chi_scar;
  j["edge_cycles"] = r.edge_cycles;
  j["vertex_orders"] = r.vertex_orders;
  j["manifold"] = r.manifold;
  j["singularities"] = r.singularities;
  j["link_genera"] = r.link_genera;
  j["homology"] = {{"betti", r.hom.betti}, {"torsion", r.hom.torsion}, {"torsion_h2", r.hom.torsion_h2}};
  j["simple"] = r.simple;
  j["cellular"] = r.cellular;
  j["special"] = r.special;
  j["distinguished"] = r.distinguished;
  return j;
}

inline std::string torsion_text(const std::vector<long long>& t) {
  if (t.empty()) return "0";
  std::ostringstream out;
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) out << " + ";
    out << "Z/" << t[i];
  }
  return out.str();
}

inline std::string homology_text(const HomologyResult& h) {
  auto group = [&](int rank, const std::vector<long long>& tor) {
    std::ostringstream out;
    bool any = false;
    if (rank > 0) {
      out << "Z";
      if (rank > 1) out << "^" << rank;
      any = true;
    }
    for (long long t : tor) {
      if (any) out << " + ";
      out << "Z/" << t;
      any = true;
    }
    return any ? out.str() : std::string("0");
  };
  std::ostringstream out;
  out << "H0=" << group(h.betti[0], {}) << " H1=" << group(h.betti[1], h.torsion)
      << " H2=" << group(h.betti[2], h.torsion_h2) << " H3=" << group(h.betti[3], {});
  return out.str();
}

inline std::string classify_text(const ClassifyReport& r) {
  std::ostringstream out;
  out << "name         " << (r.name.empty() ? "(unnamed)" : r.name) << "\n";
  out << "ball         V=" << r.V << " E=" << r.E << " F=" << r.F << "\n";
  out << "scar         V_q=" << r.V_q << " E_q=" << r.E_q << " F_q=" << r.F_q << " chi=" << r.chi_scar << "\n";
  out << "chi_quotient " << r.chi_q << "\n";
  out << "edge cycles  ";
  for (size_t i = 0; i < r.edge_cycles.size(); ++i) out << (i ? " " : "") << r.edge_cycles[i];
  out << "\nvertex orders ";
  for (size_t i = 0; i < r.vertex_orders.size(); ++i) out << (i ? " " : "") << r.vertex_orders[i];
  out << "\nmanifold     " << (r.manifold ? "true" : "false");
  if (!r.singularities.empty()) {
    out << "  singular classes:";
    for (int s : r.singularities) out << " v" << s << "(genus " << r.link_genera[s] << ")";
  }
  out << "\nhomology     " << homology_text(r.hom) << "\n";
  out << "simple       " << (r.simple ? "true" : "false") << "\n";
  out << "cellular     " << (r.cellular ? "true" : "false") << "\n";
  out << "special      " << (r.special ? "true" : "false") << "\n";
  out << "distinguished " << (r.distinguished ? "true" : "false") << "\n";
  return out.str();
}

// Deterministic DOT rendering of the boundary graph: nodes are vertices with
// class and order, edges carry label and cycle, colored by edge class.
inline std::string export_dot(const Polyhedron& p) {
  static const char* palette[] = {"red",    "blue",   "green",  "orange", "purple", "brown",
                                  "cyan",   "magenta", "gold",  "gray",   "black",  "pink"};
  const int palette_size = 12;
  const CellDividedBall& ball = p.ball();
  auto ec = p.edge_classes();
  auto vc = p.vertex_classes();
  std::ostringstream out;
  out << "graph G {\n";
  if (!p.name().empty()) out << "  label=\"" << p.name() << "\";\n";
  for (int v = 0; v < ball.vertex_count(); ++v) {
    int cls = vc.class_of[v];
    out << "  v" << v << " [label=\"v" << v << " class=" << cls << " order=" << vc.classes[cls].order()
        << "\"];\n";
  }
  for (const Label& l : ball.labels()) {
    int cls = ec.class_of.at(l);
    out << "  v" << ball.label_tail_vertex(l) << " -- v" << ball.label_head_vertex(l) << " [label=\"" << l
        << " cycle=" << ec.classes[cls].cycle() << "\" color=" << palette[cls % palette_size] << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace pif
