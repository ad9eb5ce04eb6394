#include "powerspec/export.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "powerspec/error.hpp"

namespace powerspec {

namespace {

const char* const kPalette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
                                "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"};

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

Json params_json(const Params& params) {
  Json j = Json::object();
  for (const auto& [k, v] : params) j[k] = v;
  return j;
}

Json factor_list(const std::vector<Factor>& fs) {
  Json arr = Json::array();
  for (const auto& f : fs) arr.push_back({{"coeffs", polynomial_to_json(f.poly)["coeffs"]}, {"mult", f.mult}});
  return arr;
}

}  // namespace

Json polynomial_to_json(const IntPolynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
  return {{"coeffs", coeffs}};
}

IntPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw InvalidArgument("polynomial JSON needs a \"coeffs\" array");
  std::vector<mpz_class> c;
  for (const auto& v : j["coeffs"]) {
    if (!v.is_string()) throw InvalidArgument("coefficients must be decimal strings");
    mpz_class z;
    if (z.set_str(v.get<std::string>(), 10) != 0) throw InvalidArgument("bad coefficient '" + v.get<std::string>() + "'");
    c.push_back(z);
  }
  return IntPolynomial(std::move(c));
}

Json factorization_to_json(const SpectrumFactorization& f) { return {{"factors", factor_list(f.factors())}}; }

SpectrumFactorization factorization_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("factors") || !j["factors"].is_array())
    throw InvalidArgument("factorization JSON needs a \"factors\" array");
  SpectrumFactorization f;
  for (const auto& item : j["factors"]) {
    if (!item.contains("mult") || !item["mult"].is_number_unsigned())
      throw InvalidArgument("factor needs a nonnegative \"mult\"");
    f.add(polynomial_from_json(item), item["mult"].get<std::size_t>());
  }
  return f;
}

std::string factorization_to_csv(const SpectrumFactorization& f) {
  std::string out = "factor,multiplicity\n";
  for (const auto& fac : f.factors()) {
    const auto root = fac.poly.linear_root();
    out += (root ? root->get_str() : "\"" + fac.poly.to_string() + "\"") + "," + std::to_string(fac.mult) + "\n";
  }
  return out;
}

std::string graph_to_dot(const Graph& g, const std::string& name) {
  std::map<std::string, std::vector<std::size_t>> classes;
  std::vector<std::string> order;
  for (std::size_t v = 0; v < g.order(); ++v) {
    const std::string c = g.class_label(v);
    if (!classes.count(c)) order.push_back(c);
    classes[c].push_back(v);
  }
  std::ostringstream os;
  os << "graph " << quoted(name) << " {\n  node [style=filled];\n";
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::string& c = order[k];
    const char* colour = kPalette[k % std::size(kPalette)];
    const bool cluster = !c.empty();
    std::string indent = "  ";
    if (cluster) {
      os << "  subgraph cluster_" << k << " {\n    label=" << quoted(c) << ";\n";
      indent = "    ";
    }
    for (std::size_t v : classes[c])
      os << indent << v << " [label=" << quoted(g.vertex_name(v)) << ", fillcolor=" << quoted(colour) << "];\n";
    if (cluster) os << "  }\n";
  }
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v : g.neighbors(u))
      if (u < v) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

Json graph_to_json(const Graph& g) {
  Json vertices = Json::array();
  for (std::size_t v = 0; v < g.order(); ++v) {
    std::vector<std::size_t> nb = g.neighbors(v);
    std::sort(nb.begin(), nb.end());
    vertices.push_back({{"id", v}, {"name", g.vertex_name(v)}, {"class", g.class_label(v)}, {"neighbors", nb}});
  }
  return {{"order", g.order()}, {"edges", g.edge_count()}, {"vertices", vertices}};
}

Json report_to_json(const ClosedFormReport& r) {
  Json j{{"theorem", to_string(r.id)},
         {"params", params_json(r.params)},
         {"graph_order", r.graph_order},
         {"degree", r.factorization.product_degree()},
         {"factors", factor_list(r.factorization.factors())},
         {"latex", r.factorization.latex()},
         {"caveats", r.caveats}};
  if (r.alternative) {
    j["alternative"] = {{"factors", factor_list(r.alternative->factors())},
                        {"latex", r.alternative->latex()},
                        {"note", r.alternative_note}};
  }
  Json checks = Json::array();
  for (const auto& c : r.cross_checks) checks.push_back({{"name", c.name}, {"ok", c.ok}});
  j["cross_checks"] = checks;
  return j;
}

Json report_to_json(const VerificationReport& r) {
  Json factors = Json::array();
  for (const auto& f : r.factors)
    factors.push_back({{"poly", polynomial_to_json(f.poly)},
                       {"display", f.poly.to_string()},
                       {"stated_mult", f.stated_mult},
                       {"observed_mult", f.observed_mult},
                       {"ok", f.ok}});
  Json j{{"theorem", to_string(r.id)},
         {"params", params_json(r.params)},
         {"factors", factors},
         {"equal", r.equal},
         {"degree_gap", r.degree_gap},
         {"stated_degree", r.stated_degree},
         {"oracle_degree", r.oracle_degree},
         {"confirmed", r.confirmed()},
         {"caveats", r.caveats},
         {"oracle", polynomial_to_json(r.oracle)}};
  if (r.alternative_equal) j["alternative"] = {{"equal", *r.alternative_equal}, {"note", r.alternative_note}};
  Json checks = Json::array();
  for (const auto& c : r.cross_checks) checks.push_back({{"name", c.name}, {"ok", c.ok}});
  j["cross_checks"] = checks;
  return j;
}

Json report_to_json(const StructureReport& r) {
  return {{"family", to_string(r.family)},
          {"params", r.params},
          {"structural_order", r.structural_order},
          {"group_order", r.group_order},
          {"degree_sequence_equal", r.degree_sequence_equal},
          {"adjacency_equal", r.adjacency_equal},
          {"laplacian_equal", r.laplacian_equal},
          {"distance_laplacian_equal", r.distance_laplacian_equal},
          {"equal", r.equal()}};
}

Json report_to_json(const Section4Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  return {{"ok", r.ok()}, {"checks", checks}};
}

Json rows_to_json(const std::vector<ConjectureRow>& rows) {
  Json arr = Json::array();
  std::size_t violations = 0;
  for (const auto& r : rows) {
    Json row{{"n", r.n},
             {"classification", to_string(r.classification)},
             {"algebraic_connectivity_integral", r.algebraic_connectivity_integral},
             {"laplacian_integral", r.laplacian_integral},
             {"largest_dl_integral", r.largest_dl_integral},
             {"distance_laplacian_integral", r.distance_laplacian_integral},
             {"laplacian_violation", r.laplacian_violation},
             {"distance_violation", r.distance_violation}};
    if (!r.laplacian_residual.empty()) row["laplacian_residual"] = factor_list(r.laplacian_residual);
    if (!r.distance_residual.empty()) row["distance_residual"] = factor_list(r.distance_residual);
    if (r.laplacian_violation || r.distance_violation) ++violations;
    arr.push_back(row);
  }
  return {{"rows", arr}, {"violations", violations}};
}

std::string rows_to_csv(const std::vector<ConjectureRow>& rows) {
  std::string out =
      "n,classification,algebraic_connectivity_integral,laplacian_integral,largest_dl_integral,"
      "distance_laplacian_integral,laplacian_violation,distance_violation\n";
  auto b = [](bool v) { return v ? "1" : "0"; };
  for (const auto& r : rows) {
    out += std::to_string(r.n) + "," + to_string(r.classification) + "," + b(r.algebraic_connectivity_integral) + "," +
           b(r.laplacian_integral) + "," + b(r.largest_dl_integral) + "," + b(r.distance_laplacian_integral) + "," +
           b(r.laplacian_violation) + "," + b(r.distance_violation) + "\n";
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace powerspec
