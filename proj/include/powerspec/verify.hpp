#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "powerspec/closedforms.hpp"
#include "powerspec/factorization.hpp"
#include "powerspec/graph.hpp"
#include "powerspec/groups.hpp"
#include "powerspec/polynomial.hpp"
#include "powerspec/powergraph.hpp"
#include "powerspec/spectral.hpp"

namespace powerspec {

/// Minimum number of vertices whose removal disconnects g (n-1 for K_n).
/// Even's scheme over unit-capacity flows on the split graph.
/// Throws DisconnectedGraph on disconnected input.
std::size_t vertex_connectivity(const Graph& g);

/// Local vertex connectivity between two distinct non-adjacent vertices.
std::size_t local_vertex_connectivity(const Graph& g, std::size_t s, std::size_t t,
                                      std::size_t cap = static_cast<std::size_t>(-1));

Graph oracle_graph(const GroupSpec& spec, bool proper);

/// charpoly of the requested matrix of P(G) (or P(G*)) computed from scratch.
IntPolynomial oracle_charpoly(const GroupSpec& spec, MatrixKind kind, bool proper);

struct FactorVerdict {
  IntPolynomial poly;
  std::size_t stated_mult = 0;
  std::size_t observed_mult = 0;
  bool ok = false;  // observed >= stated
};

struct VerificationReport {
  TheoremId id{};
  Params params;
  std::vector<FactorVerdict> factors;
  bool equal = false;
  std::size_t stated_degree = 0;
  std::size_t oracle_degree = 0;
  long long degree_gap = 0;  // oracle_degree - stated_degree
  /// Set when the closed form carries a dimension-consistent candidate.
  std::optional<bool> alternative_equal;
  std::string alternative_note;
  std::vector<std::string> caveats;
  std::vector<CrossCheck> cross_checks;
  IntPolynomial oracle;
  double runtime_seconds = 0;

  /// Stated form equals the oracle, or the flagged candidate does.
  bool confirmed() const { return equal || alternative_equal.value_or(false); }
  bool all_factors_divide() const;
};

VerificationReport verify_theorem(TheoremId id, const Params& params);

struct StructureReport {
  StructuralFamily family{};
  std::vector<std::uint64_t> params;
  std::size_t structural_order = 0;
  std::size_t group_order = 0;
  bool degree_sequence_equal = false;
  bool adjacency_equal = false;
  bool laplacian_equal = false;
  bool distance_laplacian_equal = false;

  bool equal() const {
    return degree_sequence_equal && adjacency_equal && laplacian_equal && distance_laplacian_equal;
  }
};

StructureReport verify_structure(StructuralFamily family, const std::vector<std::uint64_t>& params);

struct TwinReport {
  std::size_t clique_classes = 0;
  std::size_t independent_classes = 0;
  SpectrumFactorization predicted;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

TwinReport check_twin_lemmas(const Graph& g);

struct Diameter2Report {
  IntPolynomial transformed;
  IntPolynomial oracle;
  bool ok = false;
};

/// Throws InvalidArgument when diameter(g) > 2.
Diameter2Report check_diameter2(const Graph& g);

struct CorpusGraph {
  std::string name;
  Graph graph;
  bool power_graph = false;  // an improper power graph P(G)
};

/// Fixed list of small connected graphs: power graphs, proper power graphs,
/// structural displays and a few classical graphs.
std::vector<CorpusGraph> verification_corpus();

}  // namespace powerspec
