#include "powerspec/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "powerspec/charpoly.hpp"
#include "powerspec/closedforms.hpp"
#include "powerspec/error.hpp"
#include "powerspec/export.hpp"
#include "powerspec/powergraph.hpp"
#include "powerspec/roots.hpp"
#include "powerspec/scan.hpp"
#include "powerspec/section4.hpp"
#include "powerspec/spectral.hpp"
#include "powerspec/verify.hpp"

namespace powerspec {

namespace {

/// A bad value, attributed to the flag that carried it.
struct UsageError : std::runtime_error {
  UsageError(const std::string& flag, const std::string& what) : std::runtime_error(flag + ": " + what) {}
};

struct Options {
  std::string theorem;
  std::string group;
  std::string graph;
  std::string structure;
  std::string matrix = "DL";
  std::string params;
  std::string format;
  std::string out;
  bool proper = false;
  bool numeric = false;
  bool section4 = false;
  std::uint64_t max_n = 0;
};

template <typename F>
auto blame(const std::string& flag, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const DisconnectedGraph& e) {
    throw UsageError(flag, e.what());
  } catch (const InvalidArgument& e) {
    throw UsageError(flag, e.what());
  }
}

MatrixKind matrix_kind(const std::string& m) {
  if (m == "A") return MatrixKind::Adjacency;
  if (m == "L") return MatrixKind::Laplacian;
  if (m == "D") return MatrixKind::Distance;
  if (m == "DL") return MatrixKind::DistanceLaplacian;
  throw UsageError("--matrix", "expected A, L, D or DL, got '" + m + "'");
}

Graph source_graph(const Options& o) {
  const int given = !o.group.empty() + !o.graph.empty() + !o.structure.empty();
  if (given != 1) throw UsageError("--group", "give exactly one of --group, --graph, --structure");
  if (o.proper && o.group.empty()) throw UsageError("--proper", "only applies together with --group");
  if (!o.group.empty()) {
    const GroupSpec spec = blame("--group", [&] { return GroupSpec::parse(o.group); });
    const FiniteGroup g = blame("--group", [&] { return spec.build(); });
    return o.proper ? proper_power_graph(g) : power_graph(g);
  }
  if (!o.graph.empty()) return blame("--graph", [&] { return named_graph(o.graph); });
  return blame("--structure", [&] { return named_graph("structural:" + o.structure); });
}

IntMatrix source_matrix(const Options& o, const Graph& g) {
  const MatrixKind kind = matrix_kind(o.matrix);
  const std::string flag = !o.group.empty() ? (o.proper ? "--proper" : "--group") : (o.graph.empty() ? "--structure" : "--graph");
  return blame(flag, [&] { return graph_matrix(g, kind); });
}

std::string spectrum_text(const SpectrumFactorization& f, bool numeric) {
  std::ostringstream os;
  for (const auto& fac : f.factors()) {
    if (const auto r = fac.poly.linear_root())
      os << "root " << *r << " multiplicity " << fac.mult << "\n";
    else
      os << "factor " << fac.poly.to_string() << " multiplicity " << fac.mult << "\n";
  }
  if (numeric) {
    os << "numeric\n";
    char buf[64];
    for (const auto& r : certified_spectrum(f)) {
      std::snprintf(buf, sizeof buf, "%.12g", r.approx());
      os << buf << " multiplicity " << r.multiplicity << (r.exact ? "" : " approx") << "\n";
    }
  }
  return os.str();
}

Params theorem_params(const Options& o) { return blame("--params", [&] { return parse_params(o.params); }); }

TheoremId theorem_id(const Options& o) {
  if (o.theorem.empty()) throw UsageError("THEOREM", "a theorem id is required");
  return blame("THEOREM", [&] { return theorem_from_string(o.theorem); });
}

struct Result {
  std::string text;
  int code = kExitOk;
};

Result cmd_build(const Options& o) {
  const Graph g = source_graph(o);
  if (o.format == "dot") return {graph_to_dot(g)};
  return {dump(graph_to_json(g))};
}

Result cmd_charpoly(const Options& o) {
  const Graph g = source_graph(o);
  const IntPolynomial p = charpoly(source_matrix(o, g));
  if (o.format == "json") return {dump(polynomial_to_json(p))};
  if (o.format == "latex") return {p.latex() + "\n"};
  return {p.to_string() + "\n"};
}

Result cmd_spectrum(const Options& o) {
  const Graph g = source_graph(o);
  const SpectrumFactorization f = integer_root_factorization(charpoly(source_matrix(o, g)));
  if (o.format == "json") return {dump(factorization_to_json(f))};
  if (o.format == "csv") return {factorization_to_csv(f)};
  if (o.format == "latex") return {f.latex() + "\n"};
  return {spectrum_text(f, o.numeric)};
}

Result cmd_closed_form(const Options& o) {
  const TheoremId id = theorem_id(o);
  const Params params = theorem_params(o);
  const ClosedFormReport r = blame("--params", [&] { return evaluate_theorem(id, params); });
  if (o.format == "latex") return {r.factorization.latex() + "\n"};
  if (o.format == "csv") return {factorization_to_csv(r.factorization)};
  return {dump(report_to_json(r))};
}

Result cmd_verify(const Options& o, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  Result res;
  if (!o.theorem.empty()) {
    const TheoremId id = theorem_id(o);
    const Params params = theorem_params(o);
    const VerificationReport r = blame("--params", [&] { return verify_theorem(id, params); });
    res = {dump(report_to_json(r)), r.confirmed() ? kExitOk : kExitDiscrepancy};
  } else if (o.section4) {
    const Section4Report r =
        o.group.empty() ? section4_suite()
                        : blame("--group", [&] { return check_section4_inequalities(GroupSpec::parse(o.group)); });
    res = {dump(report_to_json(r)), r.ok() ? kExitOk : kExitDiscrepancy};
  } else if (!o.structure.empty() && o.group.empty() && o.graph.empty()) {
    const auto colon = o.structure.find(':');
    const StructureReport r = blame("--structure", [&] {
      std::vector<std::uint64_t> ps;
      if (colon != std::string::npos) {
        std::stringstream ss(o.structure.substr(colon + 1));
        for (std::string item; std::getline(ss, item, ',');) {
          if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw InvalidArgument("bad integer '" + item + "'");
          ps.push_back(std::stoull(item));
        }
      }
      return verify_structure(structural_family_from_string(o.structure.substr(0, colon)), ps);
    });
    res = {dump(report_to_json(r)), r.equal() ? kExitOk : kExitDiscrepancy};
  } else {
    const Graph g = source_graph(o);
    if (!is_connected(g)) throw UsageError(o.group.empty() ? "--graph" : "--proper", "graph is disconnected");
    const TwinReport twins = check_twin_lemmas(g);
    Json j{{"order", g.order()},
           {"twins", {{"clique_classes", twins.clique_classes},
                      {"independent_classes", twins.independent_classes},
                      {"predicted", factorization_to_json(twins.predicted)["factors"]},
                      {"violations", twins.violations}}}};
    bool ok = twins.ok();
    if (diameter(g) <= 2) {
      const Diameter2Report d2 = check_diameter2(g);
      j["diameter2"] = {{"ok", d2.ok}, {"transformed", polynomial_to_json(d2.transformed)}};
      ok = ok && d2.ok;
    } else {
      j["diameter2"] = nullptr;
    }
    const Section4Report bounds = check_graph_bounds("graph", g, !o.group.empty() && !o.proper);
    j["bounds"] = report_to_json(bounds);
    ok = ok && bounds.ok();
    j["ok"] = ok;
    res = {dump(j), ok ? kExitOk : kExitDiscrepancy};
  }
  err << "runtime_seconds " << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()
      << "\n";
  return res;
}

Result cmd_scan(const Options& o) {
  if (o.max_n < 2) throw UsageError("--max-n", "must be at least 2");
  if (o.max_n > 400) throw UsageError("--max-n", "at most 400");
  const auto rows = scan_integrality(o.max_n);
  bool violation = false;
  for (const auto& r : rows) violation = violation || r.laplacian_violation || r.distance_violation;
  const std::string text = o.format == "csv" ? rows_to_csv(rows) : dump(rows_to_json(rows));
  return {text, violation ? kExitDiscrepancy : kExitOk};
}

Result cmd_export(const Options& o) {
  if (!o.theorem.empty()) {
    if (o.format == "dot") throw UsageError("--format", "dot needs a graph, not a theorem");
    return cmd_closed_form(o);
  }
  if (o.format == "dot" || o.format == "json") return cmd_build(o);
  return cmd_spectrum(o);
}

void add_source(CLI::App* sub, Options& o) {
  sub->add_option("--group", o.group, "group spec, e.g. cyclic:12 or 'cyclic:2 x frobenius:7,3'");
  sub->add_option("--graph", o.graph, "named graph: complete:N, star:N, path:N, cycle:N, divisor:N, structural:FAM:ARGS");
  sub->add_option("--structure", o.structure, "structural display FAM[:ARGS], e.g. ZrFpq:2,7,3");
  sub->add_flag("--proper", o.proper, "remove the identity vertex");
}

void add_matrix(CLI::App* sub, Options& o) {
  sub->add_option("--matrix", o.matrix, "A, L, D or DL (default DL)")->check(CLI::IsMember({"A", "L", "D", "DL"}));
}

void add_out(CLI::App* sub, Options& o) { sub->add_option("--out", o.out, "write output to this file"); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Power graph spectra in exact arithmetic", "powerspec"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  Options o;

  auto* build = app.add_subcommand("build", "build a graph and print it");
  add_source(build, o);
  build->add_option("--format", o.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  add_out(build, o);

  auto* cp = app.add_subcommand("charpoly", "exact characteristic polynomial det(xI - M)");
  add_source(cp, o);
  add_matrix(cp, o);
  cp->add_option("--format", o.format, "text, json or latex")->check(CLI::IsMember({"text", "json", "latex"}));
  add_out(cp, o);

  auto* spec = app.add_subcommand("spectrum", "integer roots and residual factors");
  add_source(spec, o);
  add_matrix(spec, o);
  spec->add_option("--format", o.format, "text, json, csv or latex")
      ->check(CLI::IsMember({"text", "json", "csv", "latex"}));
  spec->add_flag("--numeric", o.numeric, "also print certified numeric roots");
  add_out(spec, o);

  auto* cf = app.add_subcommand("closed-form", "evaluate a theorem's factorization");
  cf->add_option("theorem", o.theorem, "theorem id, e.g. DL-Z2sdZ4");
  cf->add_option("--params", o.params, "k=v,...");
  cf->add_option("--format", o.format, "json, latex or csv")->check(CLI::IsMember({"json", "latex", "csv"}));
  add_out(cf, o);

  auto* ver = app.add_subcommand("verify", "compare a theorem, structure or graph against the oracle");
  ver->add_option("theorem", o.theorem, "theorem id");
  ver->add_option("--params", o.params, "k=v,...");
  add_source(ver, o);
  ver->add_flag("--section4", o.section4, "run the eigenvalue inequality checks");
  add_out(ver, o);

  auto* scan = app.add_subcommand("scan", "integrality scan of P(Z_n), 2 <= n <= max-n");
  scan->add_option("--max-n", o.max_n, "largest n")->required();
  scan->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  add_out(scan, o);

  auto* exp = app.add_subcommand("export", "export a graph, spectrum or closed form");
  exp->add_option("theorem", o.theorem, "theorem id (optional)");
  exp->add_option("--params", o.params, "k=v,...");
  add_source(exp, o);
  add_matrix(exp, o);
  exp->add_option("--format", o.format, "dot, json, csv or latex")
      ->check(CLI::IsMember({"dot", "json", "csv", "latex"}))
      ->required();
  add_out(exp, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  Result res;
  try {
    if (*build) res = cmd_build(o);
    else if (*cp) res = cmd_charpoly(o);
    else if (*spec) res = cmd_spectrum(o);
    else if (*cf) res = cmd_closed_form(o);
    else if (*ver) res = cmd_verify(o, err);
    else if (*scan) res = cmd_scan(o);
    else if (*exp) res = cmd_export(o);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (!o.out.empty()) {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      err << "error: --out: cannot open '" << o.out << "'\n";
      return kExitUsage;
    }
    f << res.text;
  } else {
    out << res.text;
  }
  return res.code;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, out, err);
}

}  // namespace powerspec
