#pragma once

#include <cstdint>
#include <vector>

#include "powerspec/factorization.hpp"
#include "powerspec/graph.hpp"
#include "powerspec/matrix.hpp"

namespace powerspec {

enum class MatrixKind { Adjacency, Laplacian, Distance, DistanceLaplacian };

IntMatrix adjacency_matrix(const Graph& g);
/// Deg - A.
IntMatrix laplacian_matrix(const Graph& g);
/// Shortest-path distances; requires a connected graph.
IntMatrix distance_matrix(const Graph& g);
/// Tr - D; requires a connected graph.
IntMatrix distance_laplacian_matrix(const Graph& g);
IntMatrix graph_matrix(const Graph& g, MatrixKind kind);

/// Tr(v) = sum of distances from v.
std::vector<std::uint64_t> transmissions(const Graph& g);
std::uint64_t wiener_index(const Graph& g);

using Partition = std::vector<std::vector<std::size_t>>;

struct QuotientMatrix {
  RationalMatrix q;
  bool equitable = false;
};

/// q(i,j) is the average row sum of block (i,j). Throws unless the
/// partition covers every index exactly once.
QuotientMatrix quotient_matrix(const IntMatrix& m, const Partition& partition);

/// Blocks of vertices sharing a class label, in order of first appearance.
Partition partition_by_labels(const Graph& g);

enum class TwinKind { Singleton, Clique, Independent };

struct TwinClass {
  std::vector<std::size_t> vertices;
  TwinKind kind;
};

/// Maximal classes of closed twins (N[u] = N[v], a clique) and open twins
/// (N(u) = N(v), an independent set). Every vertex lands in exactly one
/// class; the rest are singletons. Ordered by smallest vertex.
std::vector<TwinClass> twin_classes(const Graph& g);

Partition twin_partition(const Graph& g);

/// Linear D^L factors forced by twin classes: root Tr+1 for a clique class
/// and Tr+2 for an independent class, multiplicity size-1.
SpectrumFactorization predicted_twin_factors(const Graph& g);

}  // namespace powerspec
