#pragma once

#include <string>
#include <vector>

#include "powerspec/graph.hpp"
#include "powerspec/groups.hpp"

namespace powerspec {

struct Section4Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct Section4Report {
  std::vector<Section4Check> checks;
  bool ok() const;
  void append(const Section4Report& other);
};

/// Generic facts for any connected graph: the second smallest D^L root is at
/// least n with equality iff the complement is disconnected, and the Fiedler
/// bound mu_{n-1} <= kappa. Power graphs additionally get mu_1 = n and
/// dominance of the sorted D^L spectrum over K_n.
Section4Report check_graph_bounds(const std::string& name, const Graph& g, bool power_graph);

/// Sorted D^L spectrum of P(G) dominates that of P(reference) entrywise.
Section4Check check_dominance(const GroupSpec& g, const GroupSpec& reference);

/// Generic checks plus the family statements that apply to this group
/// (cyclic, dihedral, dicyclic, Z_r x F_{p,q}, F_{p,qr}).
Section4Report check_section4_inequalities(const GroupSpec& spec);

/// Upper bound on the largest D^L root of P(Z_n), with its equality case.
Section4Check check_cyclic_upper_bound(std::uint64_t n);

/// Fixed suite covering every statement above.
Section4Report section4_suite();

}  // namespace powerspec
