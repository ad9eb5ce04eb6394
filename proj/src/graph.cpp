#include "powerspec/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "powerspec/error.hpp"

namespace powerspec {

Graph::Graph(std::size_t n) : n_(n), adj_(n * n, 0), nbrs_(n) {}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw InvalidArgument("edge endpoint out of range");
  if (u == v) throw InvalidArgument("self-loops are not allowed");
  if (adj_[u * n_ + v]) return;
  adj_[u * n_ + v] = adj_[v * n_ + u] = 1;
  nbrs_[u].push_back(v);
  nbrs_[v].push_back(u);
  ++edges_;
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> d(n_);
  for (std::size_t v = 0; v < n_; ++v) d[v] = nbrs_[v].size();
  std::sort(d.rbegin(), d.rend());
  return d;
}

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

std::vector<std::uint32_t> bfs(const Graph& g, std::size_t source) {
  std::vector<std::uint32_t> dist(g.order(), kUnreached);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t w : g.neighbors(u)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

DistanceMatrix distance_all_pairs(const Graph& g) {
  DistanceMatrix d(g.order());
  for (std::size_t s = 0; s < g.order(); ++s) {
    d[s] = bfs(g, s);
    for (std::size_t t = 0; t < g.order(); ++t)
      if (d[s][t] == kUnreached)
        throw DisconnectedGraph("vertices " + g.vertex_name(s) + " and " + g.vertex_name(t) + " are not connected");
  }
  return d;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  const auto dist = bfs(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](std::uint32_t x) { return x == kUnreached; });
}

std::uint32_t diameter(const Graph& g) {
  std::uint32_t best = 0;
  for (const auto& row : distance_all_pairs(g))
    for (std::uint32_t x : row) best = std::max(best, x);
  return best;
}

Graph complement(const Graph& g) {
  Graph h(g.order());
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  h.class_labels = g.class_labels;
  h.vertex_names = g.vertex_names;
  return h;
}

Graph induced_subgraph(const Graph& g, const std::vector<std::size_t>& vertices) {
  Graph h(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j])) h.add_edge(i, j);
  for (std::size_t v : vertices) {
    if (!g.class_labels.empty()) h.class_labels.push_back(g.class_label(v));
    if (!g.vertex_names.empty()) h.vertex_names.push_back(g.vertex_name(v));
  }
  return h;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph star_graph(std::size_t leaves) {
  Graph g(leaves + 1);
  for (std::size_t v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidArgument("a cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

}  // namespace powerspec
