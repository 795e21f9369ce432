// inscribed: command-line front end over the library modules.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "inscribed/closed_forms.hpp"
#include "inscribed/constructions.hpp"
#include "inscribed/gale.hpp"
#include "inscribed/geometry.hpp"
#include "inscribed/io.hpp"
#include "inscribed/property_z.hpp"
#include "inscribed/search.hpp"
#include "inscribed/two_bodies.hpp"

using insc::Vec;
using insc::VertexPolytope;
using nlohmann::json;

namespace {

struct GlobalOpts {
  uint64_t seed = 0;
  double tol = 1e-10;
  std::string out;
};

void emit(const GlobalOpts& g, const json& j) {
  if (g.out.empty())
    std::cout << j.dump(2) << "\n";
  else
    insc::io::write_json(g.out, j);
}

void emit_text(const GlobalOpts& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(g.out);
    if (!f) throw std::invalid_argument("cannot write " + g.out);
    f << text;
  }
}

VertexPolytope load_polytope(const std::string& path) {
  if (path.empty() || path == "-") {
    json j;
    std::cin >> j;
    return insc::io::polytope_from_json(j);
  }
  return insc::io::read_polytope(path);
}

json vec_json(const Vec& v) {
  json a = json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

json zreport_json(const insc::propz::ZReport& rep) {
  return json{{"max_residual", rep.max_residual},
              {"residuals", rep.residuals}};
}

json search_json(const insc::search::SearchReport& rep) {
  json valences = json::object();
  for (const auto& [k, v] : rep.valences) valences[std::to_string(k)] = v;
  return json{{"d", rep.d},
              {"n", rep.n},
              {"restarts", rep.restarts},
              {"seed", rep.seed},
              {"best_volume", rep.best_volume},
              {"best_restart", rep.best_restart},
              {"failures", rep.failures},
              {"valences", valences},
              {"best_polytope", insc::io::to_json(rep.best_polytope)}};
}

Vec parse_vec(const std::vector<double>& values) {
  Vec v(static_cast<int>(values.size()));
  for (size_t i = 0; i < values.size(); ++i) v(static_cast<int>(i)) = values[i];
  return v;
}

int run(int argc, char** argv) {
  CLI::App app{"Extremal volumes of inscribed polytopes and two-body hulls"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--seed", g.seed, "RNG seed");
  app.add_option("--tol", g.tol, "numeric tolerance");
  app.add_option("--out", g.out, "output file (default stdout)");

  // construct
  auto* construct = app.add_subcommand("construct", "emit a polytope JSON");
  std::string cname;
  int cd = 3, cn = 0;
  std::vector<int> cdims;
  construct->add_option("name", cname,
                        "simplex|cross|double-pyramid|cyclic|join|cube|"
                        "icosahedron|max8|remark_P3")
      ->required();
  construct->add_option("--d", cd, "dimension");
  construct->add_option("--n", cn, "vertex count");
  construct->add_option("--dims", cdims, "join block dimensions");

  // volume
  auto* volume = app.add_subcommand("volume", "hull volume of a polytope");
  std::string vin;
  volume->add_option("file", vin, "polytope JSON ('-' or absent = stdin)");

  // zcheck
  auto* zcheck = app.add_subcommand("zcheck", "stationarity residuals");
  std::string zin;
  zcheck->add_option("file", zin)->required();

  // optimize
  auto* optimize = app.add_subcommand("optimize", "local volume maximization");
  std::string oin;
  int omax = 5000;
  optimize->add_option("file", oin)->required();
  optimize->add_option("--max-iter", omax);

  // search
  auto* search = app.add_subcommand("search", "multi-restart global search");
  int sdim = 3, sn = 0, srestarts = 50;
  search->add_option("--dim", sdim);
  search->add_option("--n", sn)->required();
  search->add_option("--restarts", srestarts);

  // table1
  auto* table1 = app.add_subcommand("table1", "reference table CSV");
  std::string trange = "4..12";
  int trestarts = 50;
  std::string tcsv;
  table1->add_option("--n", trange, "range, e.g. 4..12");
  table1->add_option("--restarts", trestarts);
  table1->add_option("--csv", tcsv, "CSV output path (default stdout)");

  // gale
  auto* gale = app.add_subcommand("gale", "Gale diagram and predicates");
  std::string gin;
  gale->add_option("file", gin)->required();

  // bounds
  auto* bounds = app.add_subcommand("bounds", "closed-form values");
  std::string formula;
  std::vector<double> fargs;
  bounds->add_option("--formula", formula)->required();
  bounds->add_option("--args", fargs, "formula arguments");
  int bd = 0;
  bounds->add_option("--d", bd, "dimension shortcut for 1-arg formulas");

  // twobody
  auto* twobody = app.add_subcommand("twobody", "two-body hull functionals");
  std::string op, tin, tin2, kind = "tetrahedra";
  std::vector<double> tnormal, tdirection;
  double xmin = -2.0, xmax = 2.0;
  int tsamples = 101, trest = 24;
  twobody->add_option("--op", op,
                      "c_tr|c0|c1|chyp|rstar|tstar|cylinder|simplex-reflect|"
                      "common-center|gprofile")
      ->required();
  twobody->add_option("--in", tin, "polytope JSON");
  twobody->add_option("--in2", tin2, "second polytope JSON");
  twobody->add_option("--kind", kind, "common-center: triangles|tetrahedra");
  twobody->add_option("--normal", tnormal, "hyperplane normal");
  twobody->add_option("--direction", tdirection, "direction vector");
  twobody->add_option("--xmin", xmin);
  twobody->add_option("--xmax", xmax);
  twobody->add_option("--samples", tsamples);
  twobody->add_option("--restarts", trest);

  // Let the global --seed/--tol/--out appear after a subcommand too.
  for (CLI::App* sub : {construct, volume, zcheck, optimize, search, table1,
                        gale, bounds, twobody})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // uniform usage-error exit code
  }

  if (*construct) {
    VertexPolytope p;
    if (cname == "simplex") {
      p = insc::constructions::regular_simplex(cd);
    } else if (cname == "cross") {
      p = insc::constructions::cross_polytope(cd);
    } else if (cname == "double-pyramid") {
      p = insc::constructions::double_pyramid(cn);
    } else if (cname == "cyclic") {
      p = insc::constructions::cyclic_polytope(cd, cn);
    } else if (cname == "join") {
      p = insc::constructions::orthogonal_join(cdims);
    } else {
      p = insc::constructions::named_polytope(cname);
    }
    emit(g, insc::io::to_json(p));
  } else if (*volume) {
    VertexPolytope p = load_polytope(vin);
    emit(g, json{{"volume", insc::polytope_volume(p)}});
  } else if (*zcheck) {
    VertexPolytope p = load_polytope(zin);
    emit(g, zreport_json(insc::propz::z_residual(p)));
  } else if (*optimize) {
    VertexPolytope p = load_polytope(oin);
    auto res = insc::propz::local_optimize(p, omax, g.tol);
    emit(g, json{{"polytope", insc::io::to_json(res.polytope)},
                 {"volume", res.volume},
                 {"iterations", res.iterations},
                 {"converged", res.converged},
                 {"max_residual", res.report.max_residual}});
  } else if (*search) {
    auto rep = insc::search::global_search(sdim, sn, srestarts, g.seed);
    emit(g, search_json(rep));
  } else if (*table1) {
    auto pos = trange.find("..");
    if (pos == std::string::npos)
      throw std::invalid_argument("--n expects a range like 4..12");
    int lo = std::stoi(trange.substr(0, pos));
    int hi = std::stoi(trange.substr(pos + 2));
    auto rows = insc::search::table1_report(lo, hi, trestarts, g.seed);
    std::string csv = insc::search::table1_csv(rows);
    if (!tcsv.empty()) {
      std::ofstream f(tcsv);
      if (!f) throw std::invalid_argument("cannot write " + tcsv);
      f << csv;
    } else {
      emit_text(g, csv);
    }
  } else if (*gale) {
    VertexPolytope p = load_polytope(gin);
    auto diag = insc::gale::gale_transform(p);
    auto pred = insc::gale::gale_predicates(diag);
    json pts = json::array();
    for (int i = 0; i < diag.n; ++i) pts.push_back(vec_json(diag.point(i)));
    emit(g, json{{"n", diag.n},
                 {"d", diag.d},
                 {"diagram_dim", diag.diagram_dim()},
                 {"points", pts},
                 {"is_polytope_diagram", pred.is_polytope_diagram},
                 {"is_simplicial", pred.is_simplicial},
                 {"is_pyramid", pred.is_pyramid},
                 {"degenerate_position", pred.degenerate_position},
                 {"facets", pred.facet_cofaces}});
  } else if (*bounds) {
    namespace forms = insc::forms;
    auto arg = [&](size_t i) {
      if (i < fargs.size()) return fargs[i];
      if (i == 0 && bd > 0) return static_cast<double>(bd);
      throw std::invalid_argument("missing argument for " + formula);
    };
    double value = 0.0;
    std::string eq = "";
    if (formula == "rs_lower") {
      value = forms::rs_lower(static_cast<int>(arg(0)));
      eq = "1 + 2 v_{d-1}/v_d";
    } else if (formula == "omega") {
      value = forms::omega(static_cast<int>(arg(0)));
      eq = "omega_n = n pi / (6(n-2))";
    } else if (formula == "vertex_bound") {
      value = forms::vertex_bound(static_cast<int>(arg(0)), arg(1));
      eq = "eq (3), circumradius side";
    } else if (formula == "face_bound") {
      auto b = forms::face_bound(static_cast<int>(arg(0)), arg(1), arg(2));
      emit(g, json{{"formula", formula},
                   {"lower", b.lower},
                   {"upper", b.upper},
                   {"paper_eq", "eq (2)"}});
      return 0;
    } else if (formula == "fejes_toth") {
      auto b = forms::fejes_toth_bounds(static_cast<int>(arg(0)),
                                        static_cast<int>(arg(1)),
                                        static_cast<int>(arg(2)), arg(3),
                                        arg(4));
      emit(g, json{{"formula", formula},
                   {"lower", b.lower},
                   {"upper", b.upper},
                   {"paper_eq", "eq (1)"}});
      return 0;
    } else if (formula == "facial_tetra") {
      value = forms::facial_tetra_bound(arg(0), arg(1));
      eq = "eq (6)";
    } else if (formula == "v_d_plus2") {
      value = forms::v_d_plus2(static_cast<int>(arg(0)));
      eq = "d+2 vertex maximum";
    } else if (formula == "v_d_plus3") {
      value = forms::v_d_plus3(static_cast<int>(arg(0)));
      eq = "d+3 vertex maximum";
    } else if (formula == "inner_symmetricity") {
      value = forms::inner_symmetricity(static_cast<int>(arg(0)));
      eq = "eq (8)";
    } else if (formula == "outer_symmetricity") {
      value = forms::outer_symmetricity(static_cast<int>(arg(0)));
      eq = "eq (9)";
    } else if (formula == "unit_ball") {
      value = forms::unit_ball_volume(static_cast<int>(arg(0)));
      eq = "J_d";
    } else if (formula == "hessian_split_omega") {
      value = forms::hessian_split_omega();
      eq = "Hessian zero split";
    } else {
      throw std::invalid_argument("unknown formula " + formula);
    }
    emit(g, json{{"formula", formula}, {"value", value}, {"paper_eq", eq}});
  } else if (*twobody) {
    namespace tb = insc::twobody;
    tb::OptConfig cfg;
    cfg.seed = g.seed;
    cfg.restarts = trest;
    auto family_result = [&](tb::IsometryFamily fam, int flat_dim = 0) {
      VertexPolytope k = load_polytope(tin);
      cfg.flat_dim = flat_dim;
      auto res = tb::c_quantity(k, fam, cfg);
      emit(g, json{{"op", op},
                   {"value", res.value},
                   {"restarts", res.restarts}});
    };
    if (op == "c_tr" || op == "tstar") {
      family_result(tb::IsometryFamily::Translations);
    } else if (op == "c0" || op == "rstar") {
      family_result(tb::IsometryFamily::PointReflections);
    } else if (op == "c1") {
      VertexPolytope k = load_polytope(tin);
      cfg.flat_dim = 1;
      auto fam = k.dim == 2 ? tb::IsometryFamily::HyperplaneReflections
                            : tb::IsometryFamily::FlatReflections;
      auto res = tb::c_quantity(k, fam, cfg);
      emit(g, json{{"op", op},
                   {"value", res.value},
                   {"restarts", res.restarts}});
    } else if (op == "chyp") {
      family_result(tb::IsometryFamily::HyperplaneReflections);
    } else if (op == "cylinder") {
      VertexPolytope k = load_polytope(tin);
      if (tdirection.empty()) {
        emit(g, json{{"op", op},
                     {"max_ratio", tb::max_cylinder_ratio(k, cfg)}});
      } else {
        emit(g, json{{"op", op},
                     {"ratio", tb::cylinder_ratio(k, parse_vec(tdirection))}});
      }
    } else if (op == "simplex-reflect") {
      VertexPolytope k = load_polytope(tin);
      if (tnormal.empty())
        throw std::invalid_argument("simplex-reflect needs --normal");
      auto res = tb::simplex_reflection(k, parse_vec(tnormal));
      emit(g, json{{"op", op},
                   {"ratio", res.ratio},
                   {"ratio_direct", res.ratio_direct},
                   {"bound", std::isnan(res.bound) ? json() : json(res.bound)},
                   {"upper_facets", res.upper_facets}});
    } else if (op == "common-center") {
      auto k = kind == "triangles" ? tb::CommonCenterKind::TwoTriangles
                                   : tb::CommonCenterKind::TwoTetrahedra;
      cfg.restarts = std::max(cfg.restarts, 64);
      auto res = tb::common_center_search(k, cfg);
      json verts = json::array();
      for (const Vec& v : res.witness_vertices) verts.push_back(vec_json(v));
      emit(g, json{{"op", op},
                   {"max_volume", res.max_volume},
                   {"witness_vertices", verts}});
    } else if (op == "gprofile") {
      VertexPolytope k = load_polytope(tin);
      VertexPolytope k2 = tin2.empty() ? k : load_polytope(tin2);
      if (tdirection.empty())
        throw std::invalid_argument("gprofile needs --direction");
      if (tsamples < 3) throw std::invalid_argument("need >= 3 samples");
      std::vector<double> xs;
      for (int i = 0; i < tsamples; ++i)
        xs.push_back(xmin + (xmax - xmin) * i / (tsamples - 1));
      auto prof = tb::g_profile(k, k2, parse_vec(tdirection), xs);
      emit(g, json{{"op", op},
                   {"parameters", prof.parameters},
                   {"values", prof.values},
                   {"convexity_defect", tb::convexity_defect(prof)}});
    } else {
      throw std::invalid_argument("unknown twobody op " + op);
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << json{{"error", e.what()}, {"kind", "usage"}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}, {"kind", "numeric"}}.dump() << "\n";
    return 1;
  }
}
