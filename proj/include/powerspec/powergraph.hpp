#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "powerspec/graph.hpp"
#include "powerspec/groups.hpp"

namespace powerspec {

/// x ~ y (x != y) iff one lies in the cyclic subgroup generated by the other.
/// Vertex i is group element i; class labels are element orders.
Graph power_graph(const FiniteGroup& g);

/// power_graph with the identity removed. May be disconnected.
Graph proper_power_graph(const FiniteGroup& g);

/// base[G_1, ..., G_t]: disjoint union of the parts plus all edges between
/// parts i and j whenever i ~ j in base. Vertices are numbered part by part.
/// Class labels are part_names[i] when given, otherwise "P<i>".
Graph joined_union(const Graph& base, const std::vector<Graph>& parts,
                   const std::vector<std::string>& part_names = {});

struct DivisorGraph {
  Graph graph;
  std::vector<std::uint64_t> divisors;  // proper divisors 1 < d < n, increasing
  std::vector<std::uint64_t> totients;  // phi(d) per vertex
};

/// Delta_n: proper divisors of n, d_i ~ d_j iff one divides the other.
DivisorGraph divisor_graph(std::uint64_t n);

enum class StructuralFamily {
  ZpZp2,
  ElemAbelianP3,
  Z2SdZ4,
  ZrFpq,
  FpqrCaseI,
  FpqrCaseII,
  Gi5,
  ProperCyclic,
  ProperDicyclic,
};

std::string to_string(StructuralFamily f);
StructuralFamily structural_family_from_string(const std::string& s);

/// Joined-union form of a power graph as displayed in the literature.
/// Parameters by family:
///   ZpZp2, ElemAbelianP3: {p}      Z2SdZ4: {}
///   ZrFpq: {r, p, q}               FpqrCaseI, FpqrCaseII, Gi5: {p, q, r}
///   ProperCyclic: {n}              ProperDicyclic: {n}
Graph structural_power_graph(StructuralFamily family, const std::vector<std::uint64_t>& params);

/// The group whose (proper, for the two proper families) power graph the
/// structural form describes.
GroupSpec structural_group(StructuralFamily family, const std::vector<std::uint64_t>& params);
bool structural_is_proper(StructuralFamily family);

/// Parses small named graphs for the CLI: complete:N, empty:N, star:N
/// (K_{1,N}), path:N, cycle:N, divisor:N, or a structural family such as
/// structural:ZrFpq:2,7,3.
Graph named_graph(const std::string& text);

}  // namespace powerspec
