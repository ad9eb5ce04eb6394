#include "powerspec/verify.hpp"

#include <chrono>

#include "powerspec/charpoly.hpp"
#include "powerspec/error.hpp"
#include "powerspec/roots.hpp"

namespace powerspec {

Graph oracle_graph(const GroupSpec& spec, bool proper) {
  const FiniteGroup g = spec.build();
  return proper ? proper_power_graph(g) : power_graph(g);
}

IntPolynomial oracle_charpoly(const GroupSpec& spec, MatrixKind kind, bool proper) {
  return charpoly(graph_matrix(oracle_graph(spec, proper), kind));
}

bool VerificationReport::all_factors_divide() const {
  for (const auto& f : factors)
    if (!f.ok) return false;
  return true;
}

VerificationReport verify_theorem(TheoremId id, const Params& params) {
  const auto start = std::chrono::steady_clock::now();
  const ClosedFormReport closed = evaluate_theorem(id, params);
  VerificationReport out;
  out.id = id;
  out.params = closed.params;
  out.caveats = closed.caveats;
  out.cross_checks = closed.cross_checks;
  out.oracle = oracle_charpoly(theorem_group(id, params), theorem_matrix(id), theorem_is_proper(id));

  for (const auto& f : closed.factorization.factors()) {
    FactorVerdict v;
    v.poly = f.poly;
    v.stated_mult = f.mult;
    v.observed_mult = multiplicity_of(out.oracle, f.poly);
    v.ok = v.observed_mult >= v.stated_mult;
    out.factors.push_back(std::move(v));
  }
  out.stated_degree = closed.factorization.product_degree();
  out.oracle_degree = static_cast<std::size_t>(out.oracle.degree());
  out.degree_gap = static_cast<long long>(out.oracle_degree) - static_cast<long long>(out.stated_degree);
  out.equal = closed.factorization.expand() == out.oracle;
  if (closed.alternative) {
    out.alternative_equal = closed.alternative->expand() == out.oracle;
    out.alternative_note = closed.alternative_note;
  }
  out.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

StructureReport verify_structure(StructuralFamily family, const std::vector<std::uint64_t>& params) {
  StructureReport out;
  out.family = family;
  out.params = params;
  const Graph s = structural_power_graph(family, params);
  const Graph g = oracle_graph(structural_group(family, params), structural_is_proper(family));
  out.structural_order = s.order();
  out.group_order = g.order();
  if (s.order() != g.order()) return out;
  out.degree_sequence_equal = s.degree_sequence() == g.degree_sequence();
  auto same = [&](MatrixKind kind) { return charpoly(graph_matrix(s, kind)) == charpoly(graph_matrix(g, kind)); };
  out.adjacency_equal = same(MatrixKind::Adjacency);
  out.laplacian_equal = same(MatrixKind::Laplacian);
  out.distance_laplacian_equal = is_connected(s) && is_connected(g) && same(MatrixKind::DistanceLaplacian);
  return out;
}

TwinReport check_twin_lemmas(const Graph& g) {
  TwinReport out;
  for (const auto& c : twin_classes(g)) {
    if (c.kind == TwinKind::Clique) ++out.clique_classes;
    if (c.kind == TwinKind::Independent) ++out.independent_classes;
  }
  out.predicted = predicted_twin_factors(g);
  const IntPolynomial dl = charpoly(distance_laplacian_matrix(g));
  for (const auto& f : out.predicted.factors()) {
    const std::size_t seen = multiplicity_of(dl, f.poly);
    if (seen < f.mult)
      out.violations.push_back(f.poly.to_string() + " predicted " + std::to_string(f.mult) + ", found " +
                               std::to_string(seen));
  }
  if (out.violations.empty() && !divide_exact(dl, out.predicted.expand()))
    out.violations.push_back("product of predicted factors does not divide the D^L charpoly");
  return out;
}

Diameter2Report check_diameter2(const Graph& g) {
  if (diameter(g) > 2) throw InvalidArgument("diameter-2 transform needs diameter at most 2");
  Diameter2Report out;
  const IntPolynomial lap = charpoly(laplacian_matrix(g));
  out.transformed = diameter2_transform(integer_root_factorization(lap), g.order()).expand();
  out.oracle = charpoly(distance_laplacian_matrix(g));
  out.ok = out.transformed == out.oracle;
  return out;
}

std::vector<CorpusGraph> verification_corpus() {
  std::vector<CorpusGraph> out;
  auto group = [&](const std::string& spec, bool proper) {
    const std::string name = proper ? "P*(" + spec + ")" : "P(" + spec + ")";
    out.push_back({name, oracle_graph(GroupSpec::parse(spec), proper), !proper});
  };
  for (const char* spec : {"cyclic:6", "cyclic:8", "cyclic:12", "cyclic:15", "cyclic:30", "dihedral:3", "dihedral:4",
                           "dihedral:5", "dihedral:6", "dicyclic:2", "dicyclic:3", "zpzp2:2", "elemab3:2",
                           "zpsdzp2:2", "frobenius:7,3", "gi5:5,3,2", "fpqr:7,3,2", "cyclic:2 x frobenius:7,3",
                           "cyclic:2 x dihedral:3"})
    group(spec, false);
  for (const char* spec : {"cyclic:6", "cyclic:12", "cyclic:30", "dicyclic:2", "dicyclic:4"}) group(spec, true);
  for (const char* name : {"complete:4", "star:3", "path:5", "cycle:5", "cycle:6", "structural:Z2sdZ4",
                           "structural:ProperDicyclic:2"})
    out.push_back({name, named_graph(name), false});
  return out;
}

}  // namespace powerspec
