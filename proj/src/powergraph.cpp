#include "powerspec/powergraph.hpp"

#include <sstream>

#include "powerspec/error.hpp"
#include "powerspec/numtheory.hpp"

namespace powerspec {

Graph power_graph(const FiniteGroup& g) {
  const std::size_t n = g.order();
  Graph out(n);
  for (Element a = 0; a < n; ++a)
    for (Element x : g.cyclic_subgroup(a))
      if (x != a) out.add_edge(a, x);
  out.class_labels.resize(n);
  out.vertex_names = g.labels();
  for (Element a = 0; a < n; ++a) out.class_labels[a] = "order " + std::to_string(g.element_order(a));
  return out;
}

Graph proper_power_graph(const FiniteGroup& g) {
  std::vector<std::size_t> keep;
  for (Element a = 0; a < g.order(); ++a)
    if (a != g.identity()) keep.push_back(a);
  return induced_subgraph(power_graph(g), keep);
}

Graph joined_union(const Graph& base, const std::vector<Graph>& parts, const std::vector<std::string>& part_names) {
  if (parts.size() != base.order())
    throw InvalidArgument("joined union needs one part per base vertex (" + std::to_string(base.order()) +
                          "), got " + std::to_string(parts.size()));
  if (!part_names.empty() && part_names.size() != parts.size())
    throw InvalidArgument("joined union part name count differs from part count");
  std::vector<std::size_t> offset(parts.size() + 1, 0);
  for (std::size_t i = 0; i < parts.size(); ++i) offset[i + 1] = offset[i] + parts[i].order();
  Graph g(offset.back());
  g.class_labels.resize(g.order());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const std::string name = part_names.empty() ? "P" + std::to_string(i) : part_names[i];
    for (std::size_t u = 0; u < parts[i].order(); ++u) {
      g.class_labels[offset[i] + u] = name;
      for (std::size_t v : parts[i].neighbors(u))
        if (u < v) g.add_edge(offset[i] + u, offset[i] + v);
    }
  }
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j : base.neighbors(i))
      if (i < j)
        for (std::size_t u = offset[i]; u < offset[i + 1]; ++u)
          for (std::size_t v = offset[j]; v < offset[j + 1]; ++v) g.add_edge(u, v);
  return g;
}

DivisorGraph divisor_graph(std::uint64_t n) {
  if (n < 2) throw InvalidArgument("divisor graph needs n >= 2");
  DivisorGraph out;
  for (std::uint64_t d : divisors(n))
    if (d > 1 && d < n) out.divisors.push_back(d);
  const std::size_t t = out.divisors.size();
  out.graph = Graph(t);
  for (std::size_t i = 0; i < t; ++i) {
    out.totients.push_back(euler_phi(out.divisors[i]));
    out.graph.vertex_names.push_back(std::to_string(out.divisors[i]));
    for (std::size_t j = i + 1; j < t; ++j)
      if (out.divisors[j] % out.divisors[i] == 0) out.graph.add_edge(i, j);
  }
  return out;
}

namespace {

struct FamilyName {
  StructuralFamily family;
  const char* name;
};

constexpr FamilyName kNames[] = {
    {StructuralFamily::ZpZp2, "ZpZp2"},
    {StructuralFamily::ElemAbelianP3, "ElemAb"},
    {StructuralFamily::Z2SdZ4, "Z2sdZ4"},
    {StructuralFamily::ZrFpq, "ZrFpq"},
    {StructuralFamily::FpqrCaseI, "Fpqr-i"},
    {StructuralFamily::FpqrCaseII, "Fpqr-ii"},
    {StructuralFamily::Gi5, "Gi5"},
    {StructuralFamily::ProperCyclic, "ProperCyclic"},
    {StructuralFamily::ProperDicyclic, "ProperDicyclic"},
};

/// Accumulates parts and base edges for a joined union.
struct Builder {
  std::vector<Graph> parts;
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> links;

  std::size_t clique(std::uint64_t k) {
    parts.push_back(complete_graph(k));
    names.push_back("K_" + std::to_string(k));
    return parts.size() - 1;
  }
  std::size_t independent(std::uint64_t k) {
    parts.push_back(empty_graph(k));
    names.push_back("N_" + std::to_string(k));
    return parts.size() - 1;
  }
  void link(std::size_t a, std::size_t b) { links.emplace_back(a, b); }
  Graph build() const {
    Graph base(parts.size());
    for (auto [a, b] : links) base.add_edge(a, b);
    return joined_union(base, parts, names);
  }
};

void need(const std::vector<std::uint64_t>& params, std::size_t k, StructuralFamily f) {
  if (params.size() != k)
    throw InvalidArgument("structural family " + to_string(f) + " takes " + std::to_string(k) + " parameters");
}

void need_prime(std::uint64_t x) {
  if (!is_prime(x)) throw InvalidArgument(std::to_string(x) + " is not prime");
}

}  // namespace

std::string to_string(StructuralFamily f) {
  for (const auto& n : kNames)
    if (n.family == f) return n.name;
  return "?";
}

StructuralFamily structural_family_from_string(const std::string& s) {
  for (const auto& n : kNames)
    if (s == n.name) return n.family;
  throw InvalidArgument("unknown structural family '" + s + "'");
}

bool structural_is_proper(StructuralFamily family) {
  return family == StructuralFamily::ProperCyclic || family == StructuralFamily::ProperDicyclic;
}

Graph structural_power_graph(StructuralFamily family, const std::vector<std::uint64_t>& params) {
  Builder b;
  switch (family) {
    case StructuralFamily::ZpZp2: {
      need(params, 1, family);
      const auto p = params[0];
      need_prime(p);
      const auto e = b.clique(1);
      for (std::uint64_t i = 0; i < p; ++i) b.link(e, b.clique(p - 1));
      const auto hub = b.clique(p - 1);
      b.link(e, hub);
      for (std::uint64_t i = 0; i < p; ++i) {
        const auto c = b.clique(p * p - p);
        b.link(e, c);
        b.link(hub, c);
      }
      break;
    }
    case StructuralFamily::ElemAbelianP3: {
      need(params, 1, family);
      const auto p = params[0];
      need_prime(p);
      const auto e = b.clique(1);
      for (std::uint64_t i = 0; i < p * p + p + 1; ++i) b.link(e, b.clique(p - 1));
      break;
    }
    case StructuralFamily::Z2SdZ4: {
      need(params, 0, family);
      const auto e = b.clique(1);
      b.link(e, b.clique(3));
      b.link(e, b.independent(4));
      break;
    }
    case StructuralFamily::ZrFpq: {
      need(params, 3, family);
      const auto r = params[0], p = params[1], q = params[2];
      for (auto x : params) need_prime(x);
      if (p % q != 1) throw InvalidArgument("ZrFpq needs p ≡ 1 (mod q)");
      const auto e = b.clique(1);
      const auto kp = b.clique(p - 1);
      const auto kpr = b.clique(p * r - p - r + 1);
      const auto kr = b.clique(r - 1);
      b.link(e, kp);
      b.link(e, kpr);
      b.link(e, kr);
      b.link(kp, kpr);
      b.link(kpr, kr);
      std::vector<std::size_t> big;
      for (std::uint64_t i = 0; i < p; ++i) {
        big.push_back(b.clique(q * r - q - r + 1));
        b.link(e, big.back());
        b.link(kr, big.back());
      }
      for (std::uint64_t i = 0; i < p; ++i) {
        const auto kq = b.clique(q - 1);
        b.link(e, kq);
        b.link(big[i], kq);
      }
      break;
    }
    case StructuralFamily::FpqrCaseI: {
      // The chain of joins is read as a path K_{p-1} ~ K_{pr-p-r+1} ~ K_{r-1} ~ each K_{qr-r}.
      need(params, 3, family);
      const auto p = params[0], q = params[1], r = params[2];
      for (auto x : params) need_prime(x);
      const auto e = b.clique(1);
      const auto kp = b.clique(p - 1);
      const auto kpr = b.clique(p * r - p - r + 1);
      const auto kr = b.clique(r - 1);
      b.link(e, kp);
      b.link(e, kpr);
      b.link(e, kr);
      b.link(kp, kpr);
      b.link(kpr, kr);
      for (std::uint64_t i = 0; i < p; ++i) {
        const auto c = b.clique(q * r - r);
        b.link(e, c);
        b.link(kr, c);
      }
      break;
    }
    case StructuralFamily::FpqrCaseII: {
      need(params, 3, family);
      const auto p = params[0], q = params[1], r = params[2];
      for (auto x : params) need_prime(x);
      const auto e = b.clique(1);
      for (std::uint64_t i = 0; i < p; ++i) b.link(e, b.clique(q * r - 1));
      break;
    }
    case StructuralFamily::Gi5: {
      // pq cyclic subgroups of order r, plus P*(Z_pq) as K_{p-1} ~ generators ~ K_{q-1}.
      need(params, 3, family);
      const auto p = params[0], q = params[1], r = params[2];
      for (auto x : params) need_prime(x);
      const auto e = b.clique(1);
      for (std::uint64_t i = 0; i < p * q; ++i) b.link(e, b.clique(r - 1));
      const auto kp = b.clique(p - 1);
      const auto gen = b.clique(p * q - p - q + 1);
      const auto kq = b.clique(q - 1);
      b.link(e, kp);
      b.link(e, gen);
      b.link(e, kq);
      b.link(kp, gen);
      b.link(gen, kq);
      break;
    }
    case StructuralFamily::ProperCyclic: {
      need(params, 1, family);
      const auto n = params[0];
      if (n < 2) throw InvalidArgument("ProperCyclic needs n >= 2");
      const DivisorGraph delta = divisor_graph(n);
      const auto gen = b.clique(euler_phi(n));
      std::vector<std::size_t> ids;
      for (std::size_t i = 0; i < delta.divisors.size(); ++i) {
        ids.push_back(b.clique(delta.totients[i]));
        b.names.back() = "d=" + std::to_string(delta.divisors[i]);
        b.link(gen, ids.back());
      }
      for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j : delta.graph.neighbors(i))
          if (i < j) b.link(ids[i], ids[j]);
      break;
    }
    case StructuralFamily::ProperDicyclic: {
      need(params, 1, family);
      const auto n = params[0];
      if (n < 2) throw InvalidArgument("ProperDicyclic needs n >= 2");
      const auto z = b.clique(1);
      b.link(z, b.clique(2 * n - 2));
      for (std::uint64_t i = 0; i < n; ++i) b.link(z, b.clique(2));
      break;
    }
  }
  return b.build();
}

GroupSpec structural_group(StructuralFamily family, const std::vector<std::uint64_t>& params) {
  auto one = [](GroupFamily f, std::vector<std::uint64_t> a) { return GroupSpec{{GroupFactor{f, std::move(a)}}}; };
  switch (family) {
    case StructuralFamily::ZpZp2: return one(GroupFamily::ZpZp2, params);
    case StructuralFamily::ElemAbelianP3: return one(GroupFamily::ElemAbelianP3, params);
    case StructuralFamily::Z2SdZ4: return one(GroupFamily::ZpSdZp2, {2});
    case StructuralFamily::ZrFpq:
      return GroupSpec{{GroupFactor{GroupFamily::Cyclic, {params.at(0)}},
                        GroupFactor{GroupFamily::Frobenius, {params.at(1), params.at(2)}}}};
    case StructuralFamily::FpqrCaseI:
    case StructuralFamily::FpqrCaseII: return one(GroupFamily::FPqr, params);
    case StructuralFamily::Gi5: return one(GroupFamily::Gi5, {params.at(0), params.at(1), params.at(2), 1});
    case StructuralFamily::ProperCyclic: return one(GroupFamily::Cyclic, params);
    case StructuralFamily::ProperDicyclic: return one(GroupFamily::Dicyclic, params);
  }
  throw Error("unknown structural family");
}

Graph named_graph(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InvalidArgument("graph spec '" + text + "' needs the form kind:N");
  const std::string kind = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  auto parse_list = [&](const std::string& s) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
        throw InvalidArgument("bad integer '" + item + "' in graph spec '" + text + "'");
      out.push_back(std::stoull(item));
    }
    return out;
  };
  if (kind == "structural") {
    const auto c2 = rest.find(':');
    const auto family = structural_family_from_string(rest.substr(0, c2));
    return structural_power_graph(family, c2 == std::string::npos ? std::vector<std::uint64_t>{}
                                                                   : parse_list(rest.substr(c2 + 1)));
  }
  const auto args = parse_list(rest);
  if (args.size() != 1) throw InvalidArgument("graph spec '" + text + "' takes one integer");
  const std::uint64_t n = args[0];
  if (n > 2000) throw InvalidArgument("graph spec '" + text + "' is too large");
  if (kind == "complete") return complete_graph(n);
  if (kind == "empty") return empty_graph(n);
  if (kind == "star") return star_graph(n);
  if (kind == "path") return path_graph(n);
  if (kind == "cycle") return cycle_graph(n);
  if (kind == "divisor") return divisor_graph(n).graph;
  throw InvalidArgument("unknown graph kind '" + kind + "'");
}

}  // namespace powerspec
