#include <algorithm>
#include <limits>
#include <queue>

#include "powerspec/error.hpp"
#include "powerspec/verify.hpp"

namespace powerspec {

namespace {

/// Unit-capacity residual network on the split graph: v_in = 2v, v_out = 2v + 1.
class SplitNetwork {
 public:
  SplitNetwork(const Graph& g, std::size_t s, std::size_t t) : head_(2 * g.order(), kNone) {
    const int inf = std::numeric_limits<int>::max() / 2;
    for (std::size_t v = 0; v < g.order(); ++v) add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? inf : 1);
    for (std::size_t u = 0; u < g.order(); ++u)
      for (std::size_t v : g.neighbors(u)) add_arc(2 * u + 1, 2 * v, inf);
  }

  std::size_t max_flow(std::size_t source, std::size_t sink, std::size_t cap) {
    std::size_t flow = 0;
    std::vector<std::size_t> via(head_.size());
    while (flow < cap) {
      std::fill(via.begin(), via.end(), kNone);
      std::queue<std::size_t> q;
      q.push(source);
      via[source] = kRoot;
      while (!q.empty() && via[sink] == kNone) {
        const std::size_t u = q.front();
        q.pop();
        for (std::size_t a = head_[u]; a != kNone; a = next_[a]) {
          if (cap_[a] > 0 && via[to_[a]] == kNone) {
            via[to_[a]] = a;
            q.push(to_[a]);
          }
        }
      }
      if (via[sink] == kNone) break;
      for (std::size_t v = sink; v != source; v = to_[via[v] ^ 1]) {
        cap_[via[v]] -= 1;
        cap_[via[v] ^ 1] += 1;
      }
      ++flow;
    }
    return flow;
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  static constexpr std::size_t kRoot = kNone - 1;

  void add_arc(std::size_t u, std::size_t v, int c) {
    to_.push_back(v), cap_.push_back(c), next_.push_back(head_[u]), head_[u] = to_.size() - 1;
    to_.push_back(u), cap_.push_back(0), next_.push_back(head_[v]), head_[v] = to_.size() - 1;
  }

  std::vector<std::size_t> head_, to_, next_;
  std::vector<int> cap_;
};

}  // namespace

std::size_t local_vertex_connectivity(const Graph& g, std::size_t s, std::size_t t, std::size_t cap) {
  if (s == t || g.adjacent(s, t)) throw InvalidArgument("local connectivity needs distinct non-adjacent vertices");
  SplitNetwork net(g, s, t);
  return net.max_flow(2 * s + 1, 2 * t, cap);
}

std::size_t vertex_connectivity(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) throw InvalidArgument("empty graph");
  if (!is_connected(g)) throw DisconnectedGraph("vertex connectivity of a disconnected graph");
  if (g.edge_count() == n * (n - 1) / 2) return n - 1;
  std::size_t best = n - 1;
  for (std::size_t v = 0; v < n; ++v) best = std::min(best, g.degree(v));
  for (std::size_t i = 0; i < n && i <= best; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || g.adjacent(i, j)) continue;
      best = std::min(best, local_vertex_connectivity(g, i, j, best));
    }
  }
  return best;
}

}  // namespace powerspec
