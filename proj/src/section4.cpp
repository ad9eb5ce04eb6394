#include "powerspec/section4.hpp"

#include <optional>
#include <sstream>

#include "powerspec/charpoly.hpp"
#include "powerspec/error.hpp"
#include "powerspec/numtheory.hpp"
#include "powerspec/roots.hpp"
#include "powerspec/spectral.hpp"
#include "powerspec/verify.hpp"

namespace powerspec {

namespace {

using Roots = std::vector<RootInterval>;

/// -1, 0, 1, or nullopt when the intervals cannot be separated.
std::optional<int> compare(const RootInterval& a, const RootInterval& b) {
  if (a.exact && b.exact) return cmp(a.lower, b.lower) < 0 ? -1 : (a.lower == b.lower ? 0 : 1);
  if (a.lower > b.upper) return 1;
  if (a.upper < b.lower) return -1;
  return std::nullopt;
}

RootInterval exact(const mpz_class& v) { return RootInterval{mpq_class(v), mpq_class(v), 1, true}; }

std::optional<int> compare(const RootInterval& a, const mpz_class& v) { return compare(a, exact(v)); }

std::string show(const RootInterval& r) {
  if (r.exact) return r.lower.get_str();
  std::ostringstream os;
  os.precision(12);
  os << "~" << r.approx();
  return os.str();
}

mpz_class Zu(std::uint64_t v) { return mpz_class(static_cast<unsigned long>(v)); }

struct Spectra {
  Graph graph;
  IntPolynomial lap, dl;
  SpectrumFactorization lap_f, dl_f;
  Roots lap_desc, dl_desc;

  explicit Spectra(Graph g) : graph(std::move(g)) {
    lap = charpoly(laplacian_matrix(graph));
    dl = charpoly(distance_laplacian_matrix(graph));
    lap_f = integer_root_factorization(lap);
    dl_f = integer_root_factorization(dl);
    lap_desc = descending_roots(lap_f);
    dl_desc = descending_roots(dl_f);
  }
  std::size_t n() const { return graph.order(); }
};

Section4Check expect_spectrum(const std::string& name, const IntPolynomial& observed, const SpectrumFactorization& f) {
  const bool ok = f.expand() == observed;
  return {name, ok, ok ? f.latex() : "expected " + f.latex() + ", oracle " + integer_root_factorization(observed).latex()};
}

/// Every entry of roots[from, to) compares with v as `want` (0 for equal, 1 for >=).
Section4Check expect_range(const std::string& name, const Roots& roots, std::size_t from, std::size_t to,
                           const mpz_class& v, bool at_least) {
  for (std::size_t i = from; i < to && i < roots.size(); ++i) {
    const auto c = compare(roots[i], v);
    const bool ok = c && (at_least ? *c >= 0 : *c == 0);
    if (!ok)
      return {name, false, "root #" + std::to_string(i + 1) + " = " + show(roots[i]) + (at_least ? " < " : " != ") +
                               v.get_str()};
  }
  return {name, true, std::to_string(to - from) + " roots checked against " + v.get_str()};
}

Section4Check check_bound(const std::string& name, const RootInterval& r, const mpz_class& bound, bool lower,
                          std::optional<bool> equality_expected) {
  const auto c = compare(r, bound);
  if (!c) return {name, false, "root " + show(r) + " not separated from " + bound.get_str()};
  bool ok = lower ? *c >= 0 : *c <= 0;
  std::string detail = "root " + show(r) + (lower ? " >= " : " <= ") + bound.get_str();
  if (equality_expected) {
    const bool eq = *c == 0;
    ok = ok && eq == *equality_expected;
    detail += eq ? " (equality)" : " (strict)";
    if (eq != *equality_expected) detail += ", equality case mismatch";
  }
  return {name, ok, detail};
}

bool is_pq(std::uint64_t n) {
  const auto f = factorize(n);
  return f.size() == 2 && f[0].second == 1 && f[1].second == 1;
}

bool is_power_of_two(std::uint64_t n) { return n && (n & (n - 1)) == 0; }

Section4Report cyclic_checks(std::uint64_t n, const Spectra& s) {
  Section4Report out;
  const std::string tag = "P(Z_" + std::to_string(n) + ")";
  const auto fac = factorize(n);
  const mpz_class N = Zu(n), phi = Zu(euler_phi(n));
  if (is_pq(n)) {
    const std::uint64_t p = fac[0].first, q = fac[1].first;
    SpectrumFactorization f;
    f.add(IntPolynomial::x());
    f.add_root(N, euler_phi(n) + 1);
    f.add_root(N + Zu(p - 1), q - 2);
    f.add_root(N + Zu(q - 1), p - 2);
    f.add_root(N + Zu(p - 1) + Zu(q - 1));
    out.checks.push_back(expect_spectrum(tag + " D^L spectrum for n = pq", s.dl, f));
  } else if (fac.size() > 1) {
    const std::size_t k = euler_phi(n) + 1;
    const std::size_t last = s.n() - 1;  // index of the zero root
    out.checks.push_back(expect_range(tag + " smallest phi(n)+1 nonzero D^L roots equal n", s.dl_desc, last - k, last,
                                      N, false));
    out.checks.push_back(expect_range(tag + " remaining D^L roots at least n", s.dl_desc, 0, last - k, N, true));
  }
  if (fac.size() == 2) {
    const auto [p, a] = fac[0];
    const auto [q, b] = fac[1];
    mpz_class t = 1;
    for (unsigned i = 1; i < a; ++i) t *= Zu(p);
    for (unsigned i = 1; i < b; ++i) t *= Zu(q);
    out.checks.push_back(check_bound(tag + " largest D^L root >= 2n - phi(n) - p^(a-1) q^(b-1)", s.dl_desc[0],
                                     2 * N - phi - t, true, a == 1 && b == 1));
  }
  if (fac.size() == 3 && fac[0].second == 1 && fac[1].second == 1 && fac[2].second == 1) {
    // p > q > r: the two largest primes
    const mpz_class p = Zu(fac[2].first), q = Zu(fac[1].first);
    out.checks.push_back(
        check_bound(tag + " largest D^L root >= 2n - phi(n) - p - q + 1", s.dl_desc[0], 2 * N - phi - p - q + 1, true,
                    std::nullopt));
  }
  out.checks.push_back(check_cyclic_upper_bound(n));
  return out;
}

Section4Report dihedral_checks(std::uint64_t n, const Spectra& s) {
  Section4Report out;
  const std::string tag = "P(D_" + std::to_string(2 * n) + ")";
  const mpz_class N = Zu(n);
  const auto fac = factorize(n);
  if (fac.size() == 1) {
    SpectrumFactorization f;
    f.add(IntPolynomial::x());
    f.add_root(2 * N);
    f.add_root(3 * N, n - 2);
    f.add_root(4 * N - 1, n);
    out.checks.push_back(expect_spectrum(tag + " D^L spectrum for prime power n", s.dl, f));
  } else if (is_pq(n)) {
    const std::uint64_t p = fac[0].first, q = fac[1].first, phi = euler_phi(n);
    SpectrumFactorization f;
    f.add(IntPolynomial::x());
    f.add_root(2 * N);
    f.add_root(3 * N, phi);
    f.add_root(3 * N + Zu(p - 1), q - 2);
    f.add_root(3 * N + Zu(q - 1), p - 2);
    f.add_root(4 * N - Zu(phi) - 1);
    f.add_root(4 * N - 1, n);
    out.checks.push_back(expect_spectrum(tag + " D^L spectrum for n = pq", s.dl, f));
  } else {
    const std::size_t m = s.n(), phi = euler_phi(n);
    out.checks.push_back(expect_range(tag + " second smallest D^L root equals 2n", s.dl_desc, m - 2, m - 1, 2 * N, false));
    out.checks.push_back(
        expect_range(tag + " next phi(n) D^L roots equal 3n", s.dl_desc, m - 2 - phi, m - 2, 3 * N, false));
    out.checks.push_back(expect_range(tag + " remaining D^L roots at least 3n", s.dl_desc, 0, m - 2 - phi, 3 * N, true));
  }
  return out;
}

Section4Report dicyclic_checks(std::uint64_t n, const Spectra& s) {
  Section4Report out;
  const std::string tag = "P(Q_" + std::to_string(n) + ")";
  const mpz_class N = Zu(n);
  if (is_power_of_two(n)) {
    SpectrumFactorization f;
    f.add(IntPolynomial::x());
    f.add_root(4 * N, 2);
    f.add_root(6 * N, 2 * n - 3);
    f.add_root(8 * N - 4, n);
    f.add_root(8 * N - 2, n);
    out.checks.push_back(expect_spectrum(tag + " D^L spectrum for generalized quaternion", s.dl, f));
  } else {
    const std::size_t m = s.n();
    out.checks.push_back(expect_range(tag + " two smallest nonzero D^L roots equal 4n", s.dl_desc, m - 3, m - 1, 4 * N,
                                      false));
    out.checks.push_back(expect_range(tag + " remaining D^L roots at least 6n", s.dl_desc, 0, m - 3, 6 * N, true));
  }
  const auto lo = compare(s.dl_desc[0], 8 * N - 2), hi = compare(s.dl_desc[0], 8 * N - 1);
  out.checks.push_back({tag + " 8n-2 <= largest D^L root < 8n-1", lo && hi && *lo >= 0 && *hi < 0,
                        "largest root " + show(s.dl_desc[0])});
  return out;
}

Section4Report connectivity_checks(const std::string& tag, const Spectra& s, std::uint64_t r, const mpz_class& pqr) {
  Section4Report out;
  const std::size_t kappa = vertex_connectivity(s.graph);
  out.checks.push_back({tag + " vertex connectivity equals r", kappa == r, "kappa = " + std::to_string(kappa)});
  const RootInterval& mu = s.lap_desc[s.n() - 2];
  out.checks.push_back(check_bound(tag + " algebraic connectivity <= r", mu, Zu(r), false, std::nullopt));
  out.checks.push_back(check_bound(tag + " largest D^L root >= 2pqr - r", s.dl_desc[0], 2 * pqr - Zu(r), true,
                                   std::nullopt));
  return out;
}

}  // namespace

bool Section4Report::ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

void Section4Report::append(const Section4Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

Section4Report check_graph_bounds(const std::string& name, const Graph& g, bool power_graph) {
  Section4Report out;
  const Spectra s(g);
  const std::size_t n = s.n();
  const mpz_class N = Zu(n);
  if (n >= 2) {
    const bool comp_disconnected = !is_connected(complement(g));
    out.checks.push_back(check_bound(name + " second smallest D^L root >= n", s.dl_desc[n - 2], N, true,
                                     comp_disconnected));
    const std::size_t kappa = vertex_connectivity(g);
    if (g.edge_count() == n * (n - 1) / 2) {
      out.checks.push_back({name + " Fiedler bound", true, "complete graph, not applicable"});
    } else {
      out.checks.push_back(check_bound(name + " Fiedler bound mu_{n-1} <= kappa", s.lap_desc[n - 2], Zu(kappa),
                                       false, std::nullopt));
    }
  }
  if (power_graph) {
    out.checks.push_back(expect_range(name + " largest Laplacian root equals n", s.lap_desc, 0, 1, N, false));
    out.checks.push_back(expect_range(name + " nonzero D^L roots dominate K_n", s.dl_desc, 0, n - 1, N, true));
  }
  return out;
}

Section4Check check_dominance(const GroupSpec& g, const GroupSpec& reference) {
  const std::string name = "P(" + g.to_string() + ") dominates P(" + reference.to_string() + ")";
  const Roots a = descending_roots(integer_root_factorization(oracle_charpoly(g, MatrixKind::DistanceLaplacian, false)));
  const Roots b =
      descending_roots(integer_root_factorization(oracle_charpoly(reference, MatrixKind::DistanceLaplacian, false)));
  if (a.size() != b.size()) return {name, false, "orders differ"};
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto c = compare(a[i], b[i]);
    if (!c || *c < 0)
      return {name, false, "index " + std::to_string(i + 1) + ": " + show(a[i]) + " vs " + show(b[i])};
  }
  return {name, true, std::to_string(a.size()) + " roots compared"};
}

Section4Check check_cyclic_upper_bound(std::uint64_t n) {
  const Spectra s(power_graph(make_cyclic(n)));
  const mpz_class bound = 2 * Zu(n) - Zu(euler_phi(n)) - 1;
  const bool equality = is_prime(n) || is_pq(n);
  return check_bound("P(Z_" + std::to_string(n) + ") largest D^L root <= 2n - phi(n) - 1", s.dl_desc[0], bound, false,
                     n >= 2 ? std::optional<bool>(equality) : std::nullopt);
}

Section4Report check_section4_inequalities(const GroupSpec& spec) {
  const Spectra s(oracle_graph(spec, false));
  Section4Report out = check_graph_bounds("P(" + spec.to_string() + ")", s.graph, true);
  if (spec.factors.size() == 1) {
    const auto& f = spec.factors[0];
    switch (f.family) {
      case GroupFamily::Cyclic:
        if (f.params[0] >= 2) out.append(cyclic_checks(f.params[0], s));
        break;
      case GroupFamily::Dihedral: out.append(dihedral_checks(f.params[0], s)); break;
      case GroupFamily::Dicyclic: out.append(dicyclic_checks(f.params[0], s)); break;
      default: break;
    }
  } else if (spec.factors.size() == 2 && spec.factors[0].family == GroupFamily::Cyclic) {
    const auto r = spec.factors[0].params[0];
    const auto& f = spec.factors[1];
    const std::string tag = "P(" + spec.to_string() + ")";
    if (f.family == GroupFamily::Frobenius && is_prime(r) && r != f.params[0] && r != f.params[1])
      out.append(connectivity_checks(tag, s, r, Zu(f.params[0]) * Zu(f.params[1]) * Zu(r)));
    // Z_r x F_{p,qr} with the same r, stated for q = 3 or r = 3
    if (f.family == GroupFamily::FPqr && f.params[2] == r && (f.params[1] == 3 || r == 3))
      out.append(connectivity_checks(tag, s, r, Zu(f.params[0]) * Zu(f.params[1]) * Zu(r)));
  }
  return out;
}

Section4Report section4_suite() {
  Section4Report out;
  const GroupSpec z8 = GroupSpec::parse("cyclic:8");
  for (const char* g : {"cyclic:8", "cyclic:2 x cyclic:4", "elemab3:2", "dihedral:4", "dicyclic:2"})
    out.checks.push_back(check_dominance(GroupSpec::parse(g), z8));
  for (const auto& c : verification_corpus()) out.append(check_graph_bounds(c.name, c.graph, c.power_graph));
  for (const char* g :
       {"cyclic:6", "cyclic:10", "cyclic:12", "cyclic:15", "cyclic:18", "cyclic:20", "cyclic:30", "cyclic:42",
        "dihedral:3", "dihedral:4", "dihedral:5", "dihedral:6", "dihedral:8", "dihedral:9", "dihedral:10",
        "dihedral:12", "dihedral:15", "dicyclic:2", "dicyclic:3", "dicyclic:4", "dicyclic:5", "cyclic:2 x frobenius:7,3", "fpqr:7,3,2",
        "cyclic:2 x fpqr:7,3,2"})
    out.append(check_section4_inequalities(GroupSpec::parse(g)));
  for (std::uint64_t n = 2; n <= 60; ++n) out.checks.push_back(check_cyclic_upper_bound(n));
  return out;
}

}  // namespace powerspec
