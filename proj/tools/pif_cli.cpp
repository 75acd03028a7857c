// Command-line front end for the polyhedra-with-identified-faces library.
//
// Exit codes: 0 success, 1 negative answer to a property query, 2 input
// error, 3 internal consistency failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pif/alike.hpp"
#include "pif/catalog.hpp"
#include "pif/moves.hpp"
#include "pif/pif_format.hpp"
#include "pif/quotient.hpp"
#include "pif/report.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw pif::ParameterError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw pif::ParameterError("cannot open output file: " + path);
  out << content;
}

struct CommonOpts {
  std::string input = "-";
  std::string output = "-";
  std::string format = "text";
  unsigned long long seed = 0;
  long long limit = 100000;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_limit_seed = false) {
  cmd->add_option("--input,-i", o.input, "input PIF file, or - for stdin");
  cmd->add_option("--output,-o", o.output, "output file, or - for stdout");
  cmd->add_option("--format,-f", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  if (with_limit_seed) {
    cmd->add_option("--seed", o.seed, "random seed");
    cmd->add_option("--limit", o.limit, "census size bound");
  }
}

pif::Polyhedron load(const CommonOpts& o) { return pif::parse(read_input(o.input)); }

std::string minimize_outcome_name(pif::MinimizeResult::Outcome o) {
  switch (o) {
    case pif::MinimizeResult::Outcome::Minimum: return "Minimum";
    case pif::MinimizeResult::Outcome::GammaEmpty: return "GammaEmpty";
    default: return "Stuck";
  }
}

nlohmann::json search_report_json(const pif::SearchReport& rep) {
  nlohmann::json j;
  j["schema_version"] = pif::kReportSchemaVersion;
  j["ball"] = rep.ball_description;
  j["total_schemes"] = rep.total_schemes;
  j["evaluated"] = rep.evaluated;
  j["limit_exceeded"] = rep.limit_exceeded;
  j["seed"] = rep.seed;
  j["manifold_count"] = rep.manifold_count;
  j["distinguished_count"] = rep.distinguished_count;
  j["schemes"] = nlohmann::json::array();
  for (const auto& rec : rep.schemes) {
    nlohmann::json s;
    s["rank"] = rec.rank;
    s["pairings"] = nlohmann::json::array();
    for (const auto& pr : rec.pairings)
      s["pairings"].push_back({{"a", pr.face_a}, {"b", pr.face_b}, {"offset", pr.offset}});
    s["manifold"] = rec.manifold;
    s["distinguished"] = rec.distinguished;
    s["chi_quotient"] = rec.chi_q;
    s["singular_count"] = rec.singular_count;
    s["betti"] = rec.betti;
    s["h1_torsion"] = rec.h1_torsion;
    j["schemes"].push_back(std::move(s));
  }
  return j;
}

std::string search_report_text(const pif::SearchReport& rep) {
  std::ostringstream out;
  out << "ball: " << rep.ball_description << "\n";
  out << "total: " << rep.total_schemes << " evaluated: " << rep.evaluated
      << " limit_exceeded: " << (rep.limit_exceeded ? "true" : "false") << " seed: " << rep.seed << "\n";
  for (const auto& rec : rep.schemes) {
    out << "scheme " << rec.rank << ":";
    for (const auto& pr : rec.pairings) out << " " << pr.face_a << "~" << pr.face_b << "@" << pr.offset;
    out << " | manifold=" << (rec.manifold ? "true" : "false")
        << " distinguished=" << (rec.distinguished ? "true" : "false") << " chi_q=" << rec.chi_q
        << " singular=" << rec.singular_count << " H1=Z^" << rec.betti[1] << " torsion="
        << pif::torsion_text(rec.h1_torsion) << "\n";
  }
  out << "summary: manifold=" << rep.manifold_count << " distinguished=" << rep.distinguished_count
      << " nonmanifold=" << (rep.evaluated - rep.manifold_count) << "\n";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polyhedra with identified faces"};
  app.require_subcommand(1);

  CommonOpts opt;
  int exit_code = 0;

  auto* validate = app.add_subcommand("validate", "parse and validate a polyhedron");
  add_common(validate, opt);
  validate->callback([&] {
    pif::Polyhedron p = load(opt);
    write_output(opt.output, "ok: " + std::to_string(p.ball().face_count()) + " faces, " +
                                 std::to_string(p.ball().edge_count()) + " edges, " +
                                 std::to_string(p.ball().vertex_count()) + " vertices\n");
  });

  auto* info = app.add_subcommand("info", "counts and orbit classes");
  add_common(info, opt);
  info->callback([&] {
    pif::Polyhedron p = load(opt);
    pif::ClassifyReport r = pif::classify(p);
    if (opt.format == "json") {
      write_output(opt.output, pif::to_json(r).dump(2) + "\n");
    } else {
      std::ostringstream out;
      out << "name " << (r.name.empty() ? "(unnamed)" : r.name) << "\n"
          << "V=" << r.V << " E=" << r.E << " F=" << r.F << "\n"
          << "V_q=" << r.V_q << " E_q=" << r.E_q << " F_q=" << r.F_q << "\n";
      out << "edge cycles:";
      for (int c : r.edge_cycles) out << " " << c;
      out << "\nvertex orders:";
      for (int c : r.vertex_orders) out << " " << c;
      out << "\n";
      write_output(opt.output, out.str());
    }
  });

  auto* normalize = app.add_subcommand("normalize", "standard form (no needless vertices)");
  add_common(normalize, opt);
  normalize->callback([&] {
    pif::Polyhedron p = load(opt);
    write_output(opt.output, pif::serialize(p.standard_form()));
  });

  auto* scar = app.add_subcommand("scar", "quotient CW structure");
  add_common(scar, opt);
  scar->callback([&] {
    pif::Polyhedron p = load(opt);
    pif::ScarComplex s = pif::scar_complex(p);
    if (opt.format == "json") {
      nlohmann::json j{{"schema_version", pif::kReportSchemaVersion},
                       {"V_q", s.vq()},
                       {"E_q", s.eq()},
                       {"F_q", s.fq()},
                       {"chi_scar", s.chi()}};
      j["edges"] = nlohmann::json::array();
      for (int e = 0; e < s.eq(); ++e)
        j["edges"].push_back({{"cycle", s.edges.classes[e].cycle()},
                              {"labels", s.edges.classes[e].labels},
                              {"tail", s.edge_endpoints[e].first},
                              {"head", s.edge_endpoints[e].second}});
      j["faces"] = nlohmann::json::array();
      for (int f = 0; f < s.fq(); ++f) {
        nlohmann::json b = nlohmann::json::array();
        for (auto [cls, sign] : s.face_cells[f].boundary) b.push_back({{"edge", cls}, {"sign", sign}});
        j["faces"].push_back(std::move(b));
      }
      write_output(opt.output, j.dump(2) + "\n");
      return;
    }
    std::ostringstream out;
    out << "V_q=" << s.vq() << " E_q=" << s.eq() << " F_q=" << s.fq() << " chi_scar=" << s.chi() << "\n";
    for (int e = 0; e < s.eq(); ++e) {
      out << "edge e" << e << " cycle=" << s.edges.classes[e].cycle() << " labels:";
      for (const auto& l : s.edges.classes[e].labels) out << " " << l;
      out << " | v" << s.edge_endpoints[e].first << " -> v" << s.edge_endpoints[e].second << "\n";
    }
    for (int f = 0; f < s.fq(); ++f) {
      out << "face f" << f << " boundary:";
      for (auto [cls, sign] : s.face_cells[f].boundary) out << " " << (sign > 0 ? "+" : "-") << "e" << cls;
      out << "\n";
    }
    write_output(opt.output, out.str());
  });

  auto* links = app.add_subcommand("links", "vertex-class links");
  add_common(links, opt);
  links->callback([&] {
    pif::Polyhedron p = load(opt);
    auto ls = pif::vertex_links(p);
    if (opt.format == "json") {
      nlohmann::json j{{"schema_version", pif::kReportSchemaVersion}};
      j["links"] = nlohmann::json::array();
      for (const auto& l : ls) {
        std::string kind = l.kind == pif::LinkGraphKind::Circle
                               ? "circle"
                               : (l.kind == pif::LinkGraphKind::Banana
                                      ? "banana"
                                      : (l.kind == pif::LinkGraphKind::CompleteK4 ? "K4" : "other"));
        j["links"].push_back({{"points", l.points},
                              {"arcs", l.arcs},
                              {"disks", l.disks},
                              {"chi", l.chi},
                              {"genus", l.genus},
                              {"graph", kind},
                              {"banana_arcs", l.banana_arcs}});
      }
      write_output(opt.output, j.dump(2) + "\n");
      return;
    }
    std::ostringstream out;
    for (size_t i = 0; i < ls.size(); ++i) {
      const auto& l = ls[i];
      out << "v" << i << ": points=" << l.points << " arcs=" << l.arcs << " disks=" << l.disks
          << " chi=" << l.chi << " genus=" << l.genus << " graph=";
      switch (l.kind) {
        case pif::LinkGraphKind::Circle: out << "circle"; break;
        case pif::LinkGraphKind::Banana: out << "banana(" << l.banana_arcs << ")"; break;
        case pif::LinkGraphKind::CompleteK4: out << "K4"; break;
        default: out << "other";
      }
      out << "\n";
    }
    write_output(opt.output, out.str());
  });

  auto* homology_cmd = app.add_subcommand("homology", "integral homology of the produced space");
  add_common(homology_cmd, opt);
  homology_cmd->callback([&] {
    pif::Polyhedron p = load(opt);
    pif::HomologyResult h = pif::homology(p);
    if (opt.format == "json") {
      nlohmann::json j{{"schema_version", pif::kReportSchemaVersion},
                       {"betti", h.betti},
                       {"torsion", h.torsion},
                       {"torsion_h2", h.torsion_h2}};
      write_output(opt.output, j.dump(2) + "\n");
    } else {
      write_output(opt.output, pif::homology_text(h) + "\n");
    }
  });

  std::vector<std::string> expectations;
  auto* classify_cmd = app.add_subcommand("classify", "full classification report");
  add_common(classify_cmd, opt);
  classify_cmd->add_option("--expect", expectations,
                           "fail (exit 1) unless the property holds: manifold, "
                           "distinguished, special, simple, cellular, or not-<property>");
  classify_cmd->callback([&] {
    pif::Polyhedron p = load(opt);
    pif::ClassifyReport r = pif::classify(p);
    write_output(opt.output, opt.format == "json" ? pif::to_json(r).dump(2) + "\n" : pif::classify_text(r));
    for (std::string e : expectations) {
      bool want = true;
      if (e.rfind("not-", 0) == 0) {
        want = false;
        e = e.substr(4);
      }
      bool got;
      if (e == "manifold")
        got = r.manifold;
      else if (e == "distinguished")
        got = r.distinguished;
      else if (e == "special")
        got = r.special;
      else if (e == "simple")
        got = r.simple;
      else if (e == "cellular")
        got = r.cellular;
      else
        throw pif::ParameterError("unknown expectation: " + e);
      if (got != want) exit_code = 1;
    }
  });

  auto* minimize_cmd = app.add_subcommand("minimize", "remove cycle-2 classes down to the minimum");
  add_common(minimize_cmd, opt);
  std::string emit_path;
  minimize_cmd->add_option("--emit", emit_path, "write the reduced polyhedron to a file");
  minimize_cmd->callback([&] {
    pif::Polyhedron p = load(opt);
    pif::MinimizeResult mr = pif::minimize(p);
    if (opt.format == "json") {
      nlohmann::json j{{"schema_version", pif::kReportSchemaVersion},
                       {"outcome", minimize_outcome_name(mr.outcome)},
                       {"removed", mr.removal_trace},
                       {"blocked", mr.blocked}};
      write_output(opt.output, j.dump(2) + "\n");
      if (!emit_path.empty()) write_output(emit_path, pif::serialize(mr.result));
      return;
    }
    std::ostringstream out;
    out << "outcome: " << minimize_outcome_name(mr.outcome) << "\n";
    out << "removed: " << mr.removal_trace.size() << " classes\n";
    for (const auto& cls : mr.removal_trace) {
      out << "  -";
      for (const auto& l : cls) out << " " << l;
      out << "\n";
    }
    if (!mr.blocked.empty()) {
      out << "blocked:\n";
      for (const auto& cls : mr.blocked) {
        out << "  -";
        for (const auto& l : cls) out << " " << l;
        out << "\n";
      }
    }
    write_output(opt.output, out.str());
    if (!emit_path.empty()) write_output(emit_path, pif::serialize(mr.result));
  });

  auto* alike_cmd = app.add_subcommand("alike", "alikeness of two polyhedra");
  std::string file_a, file_b;
  alike_cmd->add_option("a", file_a, "first PIF file")->required();
  alike_cmd->add_option("b", file_b, "second PIF file")->required();
  add_common(alike_cmd, opt);
  alike_cmd->callback([&] {
    pif::Polyhedron pa = pif::parse(read_input(file_a));
    pif::Polyhedron pb = pif::parse(read_input(file_b));
    pif::AlikeResult res = pif::alike(pa, pb);
    std::string verdict = res.verdict == pif::AlikeVerdict::Alike
                              ? "Alike"
                              : (res.verdict == pif::AlikeVerdict::NotAlike ? "NotAlike" : "Undecided");
    write_output(opt.output, verdict + ": " + res.reason + "\n");
    if (res.verdict != pif::AlikeVerdict::Alike) exit_code = 1;
  });

  auto* move = app.add_subcommand("move", "apply a cycle-2 move");
  move->require_subcommand(1);
  std::string mv_face, mv_edge;
  int mv_from = 0, mv_to = 0, mv_corner = -1;
  std::string mv_label;

  auto* mv_chord = move->add_subcommand("insert-chord", "split a face pair along a chord");
  add_common(mv_chord, opt);
  mv_chord->add_option("--face", mv_face)->required();
  mv_chord->add_option("--from", mv_from, "corner index")->required();
  mv_chord->add_option("--to", mv_to, "corner index")->required();
  mv_chord->callback([&] {
    pif::Polyhedron p = load(opt);
    write_output(opt.output, pif::serialize(pif::insert_chord(p, mv_face, mv_from, mv_to)));
  });

  auto* mv_dangle = move->add_subcommand("insert-dangling", "draw a dangling edge into a face");
  add_common(mv_dangle, opt);
  mv_dangle->add_option("--face", mv_face)->required();
  mv_dangle->add_option("--corner", mv_corner, "attach at this corner");
  mv_dangle->add_option("--edge", mv_edge, "attach on this edge's interior");
  mv_dangle->callback([&] {
    pif::Polyhedron p = load(opt);
    pif::AttachPoint at;
    if (!mv_edge.empty())
      at = pif::AttachOnEdge{mv_edge};
    else if (mv_corner >= 0)
      at = pif::AttachAtCorner{mv_corner};
    else
      throw pif::ParameterError("insert-dangling needs --corner or --edge");
    write_output(opt.output, pif::serialize(pif::insert_dangling(p, mv_face, at)));
  });

  auto* mv_remove = move->add_subcommand("remove", "remove a cycle-2 edge class");
  add_common(mv_remove, opt);
  mv_remove->add_option("--label", mv_label, "any label of the class")->required();
  mv_remove->callback([&] {
    pif::Polyhedron p = load(opt);
    write_output(opt.output, pif::serialize(pif::remove_cycle2(p, mv_label)));
  });

  auto* catalog_cmd = app.add_subcommand("catalog", "emit a catalog polyhedron or ball as PIF");
  std::string cat_name;
  catalog_cmd->add_option("name", cat_name,
                          "lens-P-Q, cube-none, cube-quarter, cube-half, dodecahedral, "
                          "annulus-loop-N, lens-ball-P, cube-ball, octahedron-ball, dodecahedron-ball")
      ->required();
  add_common(catalog_cmd, opt);
  catalog_cmd->callback([&] {
    if (auto p = pif::catalog_polyhedron(cat_name)) {
      write_output(opt.output, pif::serialize(*p));
      return;
    }
    if (auto b = pif::catalog_ball(cat_name)) {
      write_output(opt.output, pif::serialize_ball(*b, cat_name));
      return;
    }
    throw pif::ParameterError("unknown catalog entry: " + cat_name);
  });

  auto* search = app.add_subcommand("search", "census of schemes over a ball");
  add_common(search, opt, true);
  search->callback([&] {
    pif::PifDocument doc = pif::parse_document(read_input(opt.input));
    pif::CellDividedBall ball = pif::ball_from_document(doc);
    pif::SearchLimits limits;
    limits.max_schemes = opt.limit;
    limits.seed = opt.seed;
    pif::SearchReport rep = pif::search_schemes(ball, limits);
    write_output(opt.output,
                 opt.format == "json" ? search_report_json(rep).dump(2) + "\n" : search_report_text(rep));
  });

  auto* export_cmd = app.add_subcommand("export", "export as dot or json");
  std::string export_kind;
  export_cmd->add_option("kind", export_kind, "dot or json")->required()->check(CLI::IsMember({"dot", "json"}));
  add_common(export_cmd, opt);
  export_cmd->callback([&] {
    pif::Polyhedron p = load(opt);
    if (export_kind == "dot")
      write_output(opt.output, pif::export_dot(p));
    else
      write_output(opt.output, pif::to_json(pif::classify(p)).dump(2) + "\n");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const pif::InternalConsistencyError& e) {
    std::cerr << "internal consistency error: " << e.what() << "\n";
    return 3;
  } catch (const pif::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
