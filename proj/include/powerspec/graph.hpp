#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace powerspec {

/// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  explicit Graph(std::size_t n = 0);

  std::size_t order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_; }

  /// Adds {u,v}; repeated edges are ignored. Loops throw InvalidArgument.
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u * n_ + v] != 0; }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return nbrs_[v]; }
  std::size_t degree(std::size_t v) const { return nbrs_[v].size(); }

  /// Degrees in non-increasing order.
  std::vector<std::size_t> degree_sequence() const;

  /// Optional partition tag per vertex (empty when unset).
  std::vector<std::string> class_labels;
  /// Optional display name per vertex.
  std::vector<std::string> vertex_names;

  std::string class_label(std::size_t v) const { return v < class_labels.size() ? class_labels[v] : ""; }
  std::string vertex_name(std::size_t v) const {
    return v < vertex_names.size() ? vertex_names[v] : std::to_string(v);
  }

 private:
  std::size_t n_;
  std::size_t edges_ = 0;
  std::vector<unsigned char> adj_;
  std::vector<std::vector<std::size_t>> nbrs_;
};

using DistanceMatrix = std::vector<std::vector<std::uint32_t>>;

/// BFS distances; throws DisconnectedGraph when some pair is unreachable.
DistanceMatrix distance_all_pairs(const Graph& g);
bool is_connected(const Graph& g);
/// Requires a connected graph.
std::uint32_t diameter(const Graph& g);

Graph complement(const Graph& g);
Graph induced_subgraph(const Graph& g, const std::vector<std::size_t>& vertices);

Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
/// K_{1,leaves}, centre is vertex 0.
Graph star_graph(std::size_t leaves);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);

}  // namespace powerspec
