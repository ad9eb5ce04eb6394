#include "powerspec/spectral.hpp"

#include <algorithm>
#include <map>

#include "powerspec/error.hpp"

namespace powerspec {

IntMatrix adjacency_matrix(const Graph& g) {
  IntMatrix m(g.order());
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v : g.neighbors(u)) m(u, v) = 1;
  return m;
}

IntMatrix laplacian_matrix(const Graph& g) {
  IntMatrix m(g.order());
  for (std::size_t u = 0; u < g.order(); ++u) {
    m(u, u) = static_cast<unsigned long>(g.degree(u));
    for (std::size_t v : g.neighbors(u)) m(u, v) = -1;
  }
  return m;
}

IntMatrix distance_matrix(const Graph& g) {
  const DistanceMatrix d = distance_all_pairs(g);
  IntMatrix m(g.order());
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = 0; v < g.order(); ++v) m(u, v) = static_cast<unsigned long>(d[u][v]);
  return m;
}

IntMatrix distance_laplacian_matrix(const Graph& g) {
  const DistanceMatrix d = distance_all_pairs(g);
  IntMatrix m(g.order());
  for (std::size_t u = 0; u < g.order(); ++u) {
    unsigned long tr = 0;
    for (std::size_t v = 0; v < g.order(); ++v) {
      tr += d[u][v];
      if (v != u) m(u, v) = -static_cast<long>(d[u][v]);
    }
    m(u, u) = tr;
  }
  return m;
}

IntMatrix graph_matrix(const Graph& g, MatrixKind kind) {
  switch (kind) {
    case MatrixKind::Adjacency: return adjacency_matrix(g);
    case MatrixKind::Laplacian: return laplacian_matrix(g);
    case MatrixKind::Distance: return distance_matrix(g);
    case MatrixKind::DistanceLaplacian: return distance_laplacian_matrix(g);
  }
  throw Error("unknown matrix kind");
}

std::vector<std::uint64_t> transmissions(const Graph& g) {
  const DistanceMatrix d = distance_all_pairs(g);
  std::vector<std::uint64_t> tr(g.order(), 0);
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::uint32_t x : d[u]) tr[u] += x;
  return tr;
}

std::uint64_t wiener_index(const Graph& g) {
  std::uint64_t total = 0;
  for (auto t : transmissions(g)) total += t;
  return total / 2;
}

QuotientMatrix quotient_matrix(const IntMatrix& m, const Partition& partition) {
  const std::size_t n = m.size();
  std::vector<std::size_t> owner(n, partition.size());
  for (std::size_t b = 0; b < partition.size(); ++b) {
    if (partition[b].empty()) throw InvalidArgument("partition has an empty block");
    for (std::size_t v : partition[b]) {
      if (v >= n) throw InvalidArgument("partition index out of range");
      if (owner[v] != partition.size()) throw InvalidArgument("partition blocks overlap");
      owner[v] = b;
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (owner[v] == partition.size()) throw InvalidArgument("partition does not cover index " + std::to_string(v));

  const std::size_t k = partition.size();
  QuotientMatrix out{RationalMatrix(k), true};
  std::vector<mpz_class> sums(k);
  for (std::size_t bi = 0; bi < k; ++bi) {
    std::vector<mpz_class> first;
    std::vector<mpz_class> total(k, 0);
    for (std::size_t idx = 0; idx < partition[bi].size(); ++idx) {
      const std::size_t row = partition[bi][idx];
      std::fill(sums.begin(), sums.end(), 0);
      for (std::size_t c = 0; c < n; ++c)
        if (m(row, c) != 0) sums[owner[c]] += m(row, c);
      if (idx == 0) {
        first = sums;
      } else if (out.equitable && sums != first) {
        out.equitable = false;
      }
      for (std::size_t bj = 0; bj < k; ++bj) total[bj] += sums[bj];
    }
    for (std::size_t bj = 0; bj < k; ++bj) {
      out.q(bi, bj) = mpq_class(total[bj], static_cast<unsigned long>(partition[bi].size()));
      out.q(bi, bj).canonicalize();
    }
  }
  return out;
}

Partition partition_by_labels(const Graph& g) {
  Partition out;
  std::map<std::string, std::size_t> index;
  for (std::size_t v = 0; v < g.order(); ++v) {
    const auto [it, inserted] = index.try_emplace(g.class_label(v), out.size());
    if (inserted) out.emplace_back();
    out[it->second].push_back(v);
  }
  return out;
}

std::vector<TwinClass> twin_classes(const Graph& g) {
  const std::size_t n = g.order();
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> closed, open;
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::size_t> nb = g.neighbors(v);
    std::sort(nb.begin(), nb.end());
    open[nb].push_back(v);
    nb.insert(std::lower_bound(nb.begin(), nb.end(), v), v);
    closed[nb].push_back(v);
  }
  std::vector<int> assigned(n, 0);
  std::vector<TwinClass> out;
  for (auto& [key, vs] : closed)
    if (vs.size() > 1) {
      for (auto v : vs) assigned[v] = 1;
      out.push_back({vs, TwinKind::Clique});
    }
  for (auto& [key, vs] : open)
    if (vs.size() > 1) {
      for (auto v : vs)
        if (assigned[v]) throw Error("vertex is both an open and a closed twin");
      for (auto v : vs) assigned[v] = 1;
      out.push_back({vs, TwinKind::Independent});
    }
  for (std::size_t v = 0; v < n; ++v)
    if (!assigned[v]) out.push_back({{v}, TwinKind::Singleton});
  std::sort(out.begin(), out.end(),
            [](const TwinClass& a, const TwinClass& b) { return a.vertices.front() < b.vertices.front(); });
  return out;
}

Partition twin_partition(const Graph& g) {
  Partition out;
  for (auto& c : twin_classes(g)) out.push_back(c.vertices);
  return out;
}

SpectrumFactorization predicted_twin_factors(const Graph& g) {
  const auto tr = transmissions(g);
  SpectrumFactorization out;
  for (const auto& c : twin_classes(g)) {
    if (c.kind == TwinKind::Singleton) continue;
    const std::uint64_t t = tr[c.vertices.front()];
    const unsigned long root = static_cast<unsigned long>(t + (c.kind == TwinKind::Clique ? 1 : 2));
    out.add_root(mpz_class(root), c.vertices.size() - 1);
  }
  return out;
}

}  // namespace powerspec
