// eqgeo: construction, reports, exports, and the verification suite for the
// equidistant-code point-line geometries.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eqgeo/automorphisms.hpp"
#include "eqgeo/codes.hpp"
#include "eqgeo/export.hpp"
#include "eqgeo/geometry.hpp"
#include "eqgeo/graph.hpp"
#include "eqgeo/johnson.hpp"
#include "eqgeo/qary.hpp"
#include "eqgeo/sets.hpp"
#include "eqgeo/verify.hpp"

namespace {

using namespace eqgeo;

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << text;
}

std::vector<std::string> split_rows(const std::string& s) {
  std::vector<std::string> rows;
  std::string cur;
  for (char c : s) {
    if (c == ',' || c == ';' || c == ' ' || c == '\n' || c == '\t') {
      if (!cur.empty()) rows.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) rows.push_back(cur);
  return rows;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::string num;
  for (char c : s + ",") {
    if (c == ',' || c == ' ' || c == '\n' || c == '\t') {
      if (!num.empty()) out.push_back(std::stoi(num));
      num.clear();
    } else {
      num += c;
    }
  }
  return out;
}

// "l_3", "s_1,2" or "s'_1,2"
SpecialMapRef parse_special(const std::string& text) {
  auto us = text.find('_');
  if (us == std::string::npos) throw std::invalid_argument("malformed special-map name: " + text);
  std::string head = text.substr(0, us);
  std::vector<int> idx = parse_int_list(text.substr(us + 1));
  SpecialMapRef ref;
  if (head == "l") {
    if (idx.size() != 1) throw std::invalid_argument("l-maps take one index");
    ref.kind = SpecialMapKind::l;
    ref.idx = {idx[0], 0};
  } else if (head == "s" || head == "s'") {
    if (idx.size() != 2) throw std::invalid_argument("s-maps take two indices");
    ref.kind = head == "s" ? SpecialMapKind::s : SpecialMapKind::s_prime;
    ref.idx = {idx[0], idx[1]};
  } else {
    throw std::invalid_argument("malformed special-map name: " + text);
  }
  return ref;
}

std::string describe_decomposition(const AutDecomposition& d) {
  std::string s = "permutation (";
  for (size_t i = 0; i < d.perm.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(d.perm[i]);
  }
  s += ")";
  if (d.exceptional) s += " * " + special_map_name(*d.exceptional);
  return s;
}

std::string clique_kind_name(CliqueKind k) {
  switch (k) {
    case CliqueKind::line: return "line";
    case CliqueKind::singular_subspace: return "singular-subspace";
    default: return "other";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"point-line geometries of binary equidistant codes"};
  app.require_subcommand(1);
  int rc = 0;

  int n = 0, m = 0, t = 0, i = 0, q = 0, k = 0;
  std::string format = "text", output, rows_text, from_text, to_text;
  std::string perm_text, special_text, images_path, tag = "all";
  VerifyOptions vopts;

  auto add_format = [&](CLI::App* cmd, std::vector<std::string> allowed) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember(allowed))
        ->capture_default_str();
  };
  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("-o,--output", output, "write to a file instead of stdout");
  };

  // ---- geometry ----
  auto* geo = app.add_subcommand("geometry", "binary geometry reports");
  geo->require_subcommand(1);
  for (CLI::App* c : {geo->add_subcommand("stats", "configuration summary"),
                      geo->add_subcommand("lines", "list all lines"),
                      geo->add_subcommand("cliques", "maximal cliques, classified"),
                      geo->add_subcommand("export", "full geometry export")}) {
    c->add_option("--n", n, "code length")->required();
    c->add_option("--m", m, "half the constant weight")->required();
    add_output(c);
  }
  add_format(geo->get_subcommand("stats"), {"text", "json"});
  add_format(geo->get_subcommand("lines"), {"text", "json"});
  add_format(geo->get_subcommand("cliques"), {"text", "json"});
  add_format(geo->get_subcommand("export"), {"json", "dot"});
  geo->get_subcommand("export")->get_option("--format")->default_str("json");
  bool singular_only = false;
  geo->get_subcommand("cliques")->add_flag("--singular", singular_only,
                                           "list maximal singular subspaces instead");

  geo->get_subcommand("stats")->callback([&] {
    Geometry g(n, m);
    int diam = graph_diameter(g.adjacency());
    if (format == "json") {
      nlohmann::json j{{"n", g.n()},
                       {"m", g.m()},
                       {"points", g.num_points()},
                       {"lines", g.lines().size()},
                       {"lines_per_point", g.lines_per_point()},
                       {"degree", g.degree()},
                       {"diameter", diam}};
      emit(output, j.dump(2) + "\n");
      return;
    }
    std::ostringstream os;
    os << "geometry (" << g.n() << "," << g.m() << ")\n"
       << "points: " << g.num_points() << "\n"
       << "lines: " << g.lines().size() << "\n"
       << "lines per point: " << g.lines_per_point() << "\n"
       << "degree: " << g.degree() << "\n"
       << "diameter: " << diam << "\n";
    emit(output, os.str());
  });

  geo->get_subcommand("lines")->callback([&] {
    Geometry g(n, m);
    if (format == "json") {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& ln : g.lines()) j.push_back({ln[0], ln[1], ln[2]});
      emit(output, nlohmann::json{{"lines", j}}.dump(2) + "\n");
      return;
    }
    std::ostringstream os;
    for (size_t idx = 0; idx < g.lines().size(); ++idx) {
      const auto& ln = g.lines()[idx];
      os << idx << ": " << set_to_string(g.support(ln[0])) << " "
         << set_to_string(g.support(ln[1])) << " " << set_to_string(g.support(ln[2])) << "\n";
    }
    emit(output, os.str());
  });

  geo->get_subcommand("cliques")->callback([&] {
    Geometry g(n, m);
    std::ostringstream os;
    if (singular_only) {
      auto subs = maximal_singular_subspaces(g);
      if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& s : subs) j.push_back(s);
        emit(output, nlohmann::json{{"singular_subspaces", j}}.dump(2) + "\n");
        return;
      }
      os << subs.size() << " maximal singular subspaces\n";
      for (const auto& s : subs) {
        for (int p : s) os << set_to_string(g.support(p)) << " ";
        os << "\n";
      }
      emit(output, os.str());
      return;
    }
    auto reports = maximal_cliques(g);
    if (format == "json") {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& r : reports)
        j.push_back({{"members", r.members},
                     {"kind", clique_kind_name(r.kind)},
                     {"symmetric_design", r.design_flag}});
      emit(output, nlohmann::json{{"maximal_cliques", j}}.dump(2) + "\n");
      return;
    }
    os << reports.size() << " maximal cliques\n";
    for (const auto& r : reports) {
      os << "size " << r.members.size() << "  " << clique_kind_name(r.kind);
      if (r.design_flag) os << "  symmetric-design";
      os << " ";
      for (int p : r.members) os << " " << set_to_string(g.support(p));
      os << "\n";
    }
    emit(output, os.str());
  });

  geo->get_subcommand("export")->callback([&] {
    Geometry g(n, m);
    if (format == "dot") emit(output, geometry_dot(g));
    else emit(output, geometry_json(g).dump(2) + "\n");
  });

  // ---- codes ----
  auto* codes = app.add_subcommand("codes", "equidistant-code tools");
  codes->require_subcommand(1);
  auto* decompose = codes->add_subcommand("decompose", "decompose a generator matrix");
  decompose->add_option("--rows", rows_text, "generator rows, e.g. \"110100,011010\"")->required();
  add_format(decompose, {"text", "json"});
  add_output(decompose);
  decompose->callback([&] {
    Code c = Code::parse(split_rows(rows_text));
    if (!is_equidistant(c)) {
      emit(output, "not equidistant\n");
      rc = 1;
      return;
    }
    if (format == "json") {
      emit(output, code_profile_json(c).dump(2) + "\n");
      return;
    }
    EquidistantProfile p = bonis_decompose(c);
    std::ostringstream os;
    os << "k=" << p.k << " s=" << p.s << " r=" << p.r << " t=" << p.t << " n=" << c.length()
       << "\n";
    emit(output, os.str());
  });

  auto* maxdim = codes->add_subcommand("maxdim", "maximal equidistant dimension");
  maxdim->add_option("--n", n, "code length")->required();
  maxdim->add_option("--t", t, "distance")->required();
  add_output(maxdim);
  maxdim->callback([&] { emit(output, std::to_string(max_equidistant_dim(n, t)) + "\n"); });

  // ---- aut ----
  auto* aut = app.add_subcommand("aut", "automorphism tools");
  aut->require_subcommand(1);
  for (CLI::App* c : {aut->add_subcommand("group", "automorphism group of the geometry"),
                      aut->add_subcommand("gamma-group", "automorphism group of the graph"),
                      aut->add_subcommand("classify", "decompose an automorphism")}) {
    c->add_option("--n", n, "code length")->required();
    c->add_option("--m", m, "half the constant weight")->required();
    add_output(c);
  }
  add_format(aut->get_subcommand("group"), {"text", "json"});
  add_format(aut->get_subcommand("gamma-group"), {"text", "json"});
  add_format(aut->get_subcommand("classify"), {"text", "json"});
  auto* classify = aut->get_subcommand("classify");
  classify->add_option("--perm", perm_text, "coordinate permutation, 1-based images");
  classify->add_option("--special", special_text, "special factor: l_3, s_1,2 or s'_1,2");
  classify->add_option("--images", images_path, "file of point images, 0-based");

  auto group_report = [&](const AutGroup& gr, const Geometry* g) {
    if (format == "json") {
      emit(output, aut_group_json(gr, g).dump(2) + "\n");
      return;
    }
    std::ostringstream os;
    os << "order: " << gr.order << "\n"
       << "generators: " << gr.generators.size() << "\n";
    if (g) {
      Classifier cls(*g);
      for (size_t idx = 0; idx < gr.generators.size(); ++idx)
        os << "  g" << idx << ": " << describe_decomposition(cls.classify(gr.generators[idx]))
           << "\n";
    }
    emit(output, os.str());
  };
  aut->get_subcommand("group")->callback([&] {
    Geometry g(n, m);
    group_report(automorphism_group(g), &g);
  });
  aut->get_subcommand("gamma-group")->callback([&] {
    Geometry g(n, m);
    group_report(graph_automorphism_group(g), nullptr);
  });
  classify->callback([&] {
    Geometry g(n, m);
    PointMap f;
    if (!images_path.empty()) {
      std::ifstream in(images_path);
      if (!in) throw std::invalid_argument("cannot read " + images_path);
      int v;
      while (in >> v) f.push_back(v);
    } else if (!perm_text.empty()) {
      f = permutation_point_map(parse_int_list(perm_text), g);
      if (!special_text.empty()) {
        auto ref = parse_special(special_text);
        std::vector<int> idx{ref.idx[0]};
        if (ref.kind != SpecialMapKind::l) idx.push_back(ref.idx[1]);
        auto xmap = induced_point_map(make_special_map(ref.kind, idx, g.n()), g);
        if (!xmap)
          throw std::invalid_argument(special_text + " does not act on the points of this geometry");
        f = compose_maps(f, *xmap);
      }
    } else {
      throw CLI::RequiredError("--perm or --images");
    }
    if (!is_geometry_automorphism(g, f)) {
      emit(output, "not an automorphism of the geometry\n");
      rc = 1;
      return;
    }
    AutDecomposition d = classify_automorphism(g, f);
    if (format == "json") emit(output, aut_decomposition_json(d).dump(2) + "\n");
    else emit(output, describe_decomposition(d) + "\n");
  });

  // ---- johnson ----
  auto* johnson = app.add_subcommand("johnson", "Johnson-type graphs J(n,t,i)");
  johnson->require_subcommand(1);
  for (CLI::App* c : {johnson->add_subcommand("build", "construct and summarize"),
                      johnson->add_subcommand("path", "constructive path between vertices")}) {
    c->add_option("--n", n, "ground-set size")->required();
    c->add_option("--t", t, "subset size")->required();
    c->add_option("--i", i, "intersection size")->required();
    add_output(c);
  }
  add_format(johnson->get_subcommand("build"), {"text", "json", "dot"});
  auto* jpath = johnson->get_subcommand("path");
  jpath->add_option("--from", from_text, "source vertex, e.g. \"1,2,3\"")->required();
  jpath->add_option("--to", to_text, "target vertex")->required();

  johnson->get_subcommand("build")->callback([&] {
    JohnsonGraph jg(n, t, i);
    if (format == "json") {
      emit(output, johnson_json(jg).dump(2) + "\n");
      return;
    }
    if (format == "dot") {
      emit(output, johnson_dot(jg));
      return;
    }
    std::ostringstream os;
    os << "J(" << n << "," << t << "," << i << ")\n"
       << "vertices: " << jg.num_vertices() << "\n"
       << "degree: " << jg.degree() << "\n"
       << "connected: " << (jg.connected() ? "yes" : "no") << "\n";
    emit(output, os.str());
  });
  jpath->callback([&] {
    JohnsonGraph jg(n, t, i);
    mask_t X = parse_set(from_text, n), Y = parse_set(to_text, n);
    if (jg.index_of(X) < 0 || jg.index_of(Y) < 0)
      throw std::invalid_argument("endpoints must be " + std::to_string(t) + "-subsets of [" +
                                  std::to_string(n) + "]");
    std::ostringstream os;
    for (mask_t v : connectivity_path(jg, X, Y)) os << set_to_string(v) << "\n";
    emit(output, os.str());
  });

  // ---- qary ----
  auto* qary = app.add_subcommand("qary", "q-ary simplex-code geometries");
  qary->require_subcommand(1);
  auto* qstats = qary->add_subcommand("stats", "configuration summary");
  qstats->add_option("--q", q, "field size")->required();
  qstats->add_option("--k", k, "code dimension")->required();
  add_format(qstats, {"text", "json"});
  add_output(qstats);
  qstats->callback([&] {
    QGeometry g(q, k);
    if (format == "json") {
      emit(output, qary_json(g).dump(2) + "\n");
      return;
    }
    QConnectivity c = qary_connectivity_and_diameter(g);
    std::ostringstream os;
    os << "q-ary geometry (q=" << g.q() << ", k=" << g.k() << ")\n"
       << "length n: " << g.n() << "\n"
       << "weight t: " << g.t() << "\n"
       << "points: " << g.num_points() << "\n"
       << "connected: " << (c.connected ? "yes" : "no") << "\n"
       << "diameter: " << c.diameter << "\n";
    emit(output, os.str());
  });

  auto* qexample = qary->add_subcommand("example", "the q=5 distant-pair example");
  add_format(qexample, {"text", "json"});
  add_output(qexample);
  qexample->callback([&] {
    QGeometry g(5, 2);
    QVector a{5, {0, 1, 1, 1, 1, 1}}, b{5, {0, 1, 1, 1, 2, 2}};
    int ia = g.index_of(a), ib = g.index_of(b);
    bool coll = qary_collinear(g, ia, ib);
    size_t common = qary_common_neighbors(g, ia, ib).size();
    QConnectivity c = qary_connectivity_and_diameter(g);
    if (format == "json") {
      nlohmann::json j{{"q", 5},          {"k", 2},
                       {"P", a.to_string()}, {"P2", b.to_string()},
                       {"collinear", coll},  {"common_neighbors", common},
                       {"connected", c.connected}, {"diameter", c.diameter}};
      emit(output, j.dump(2) + "\n");
      return;
    }
    std::ostringstream os;
    os << "points " << a.to_string() << " and " << b.to_string() << " in (q=5, k=2)\n"
       << "collinear: " << (coll ? "yes" : "no") << "\n"
       << "common neighbors: " << common << "\n"
       << "graph connected: " << (c.connected ? "yes" : "no") << "\n"
       << "diameter: " << c.diameter << "\n";
    emit(output, os.str());
  });

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("tag", tag, "check tag, or 'all'")->capture_default_str();
  verify->add_option("--max-n", vopts.max_n, "skip instances above this length")
      ->capture_default_str();
  verify->add_option("--seed", vopts.seed, "seed for randomized spot checks")
      ->capture_default_str();
  add_format(verify, {"text", "json"});
  add_output(verify);
  verify->callback([&] {
    std::vector<CheckResult> results;
    if (tag == "all") results = run_all_checks(vopts);
    else results.push_back(run_check(tag, vopts));
    std::ostringstream os;
    nlohmann::json j = nlohmann::json::array();
    for (const CheckResult& r : results) {
      const char* word = r.status == CheckStatus::pass ? "PASS"
                         : r.status == CheckStatus::fail ? "FAIL"
                                                         : "SKIP";
      if (r.status == CheckStatus::fail) rc = 1;
      os << "[" << word << "] " << r.tag << ": " << r.detail << "\n";
      j.push_back({{"tag", r.tag}, {"status", word}, {"detail", r.detail}});
    }
    emit(output, format == "json" ? j.dump(2) + "\n" : os.str());
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
