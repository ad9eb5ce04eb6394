#include "powerspec/roots.hpp"

#include <algorithm>
#include <cmath>

#include "powerspec/error.hpp"
#include "powerspec/numtheory.hpp"

namespace powerspec {

namespace {

constexpr unsigned long kDirectScanLimit = 1ul << 22;
constexpr std::uint64_t kFilterPrime = 4611686018427387847ull;  // 2^62 - 57

int sign(const mpz_class& v) { return sgn(v); }

int sign_at(const IntPolynomial& p, const mpq_class& x) { return sgn(p.eval(x)); }

/// 1 + ceil(max |c_i| / |c_d|) bounds every root in absolute value.
mpz_class cauchy_bound(const IntPolynomial& p) {
  const auto& c = p.coeffs();
  mpz_class best = 0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    if (abs(c[i]) > best) best = abs(c[i]);
  mpz_class q;
  mpz_class lc = abs(c.back());
  mpz_cdiv_q(q.get_mpz_t(), best.get_mpz_t(), lc.get_mpz_t());
  return q + 1;
}

/// Fujiwara: 2 max |c_{d-i}|^{1/i} for a monic polynomial of degree d.
double fujiwara_bound(const IntPolynomial& p) {
  const auto& c = p.coeffs();
  const std::size_t d = c.size() - 1;
  double best = 0;
  for (std::size_t i = 1; i <= d; ++i) {
    const mpz_class& a = c[d - i];
    if (a == 0) continue;
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, a.get_mpz_t());
    const double log2a = std::log2(std::fabs(mant)) + static_cast<double>(exp2);
    best = std::max(best, std::exp2(log2a / static_cast<double>(i)));
  }
  return 2.0 * best;
}

void strip_root(IntPolynomial& q, const mpz_class& root, SpectrumFactorization& out) {
  const IntPolynomial lin = IntPolynomial::linear(root);
  std::size_t k = 0;
  for (;;) {
    auto [quot, rem] = divmod_monic(q, lin);
    if (!rem.is_zero()) break;
    q = std::move(quot);
    ++k;
  }
  out.add(lin, k);
}

std::uint64_t eval_mod(const std::vector<std::uint64_t>& c, std::int64_t x, std::uint64_t p) {
  const std::uint64_t xm = x >= 0 ? static_cast<std::uint64_t>(x) % p : p - (static_cast<std::uint64_t>(-x) % p);
  std::uint64_t acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = mul_mod(acc, xm, p) + c[i];
    if (acc >= p) acc -= p;
  }
  return acc;
}

}  // namespace

SpectrumFactorization integer_root_factorization(const IntPolynomial& p) {
  if (!p.is_monic()) throw InvalidArgument("integer_root_factorization needs a monic polynomial");
  SpectrumFactorization out;
  std::vector<mpz_class> c = p.coeffs();
  std::size_t zeros = 0;
  while (c[zeros] == 0) ++zeros;
  IntPolynomial q(std::vector<mpz_class>(c.begin() + static_cast<long>(zeros), c.end()));
  out.add(IntPolynomial::x(), zeros);
  if (q.degree() <= 0) return out;

  std::vector<mpz_class> roots;
  const double bound = fujiwara_bound(q);
  if (bound <= static_cast<double>(kDirectScanLimit)) {
    const long b = static_cast<long>(std::ceil(bound)) + 1;
    std::vector<std::uint64_t> cm(q.coeffs().size());
    for (std::size_t i = 0; i < cm.size(); ++i) cm[i] = mpz_fdiv_ui(q.coeffs()[i].get_mpz_t(), kFilterPrime);
    const mpz_class& c0 = q.coeffs()[0];
    for (long x = -b; x <= b; ++x) {
      if (x == 0) continue;
      const unsigned long ax = static_cast<unsigned long>(x < 0 ? -x : x);
      if (!mpz_divisible_ui_p(c0.get_mpz_t(), ax)) continue;
      if (eval_mod(cm, x, kFilterPrime) != 0) continue;
      if (q.eval(mpz_class(x)) == 0) roots.emplace_back(x);
    }
  } else {
    // Integer roots are real: test the integers next to each isolated real root.
    for (const auto& r : real_roots(q, 0.25)) {
      mpz_class lo, hi;
      mpz_fdiv_q(lo.get_mpz_t(), r.lower.get_num_mpz_t(), r.lower.get_den_mpz_t());
      mpz_cdiv_q(hi.get_mpz_t(), r.upper.get_num_mpz_t(), r.upper.get_den_mpz_t());
      for (mpz_class x = lo; x <= hi; ++x)
        if (x != 0 && q.eval(x) == 0 && std::find(roots.begin(), roots.end(), x) == roots.end()) roots.push_back(x);
    }
    std::sort(roots.begin(), roots.end());
  }
  for (const auto& r : roots) strip_root(q, r, out);
  if (q.degree() > 0) out.add(q, 1);
  return out;
}

std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& p) {
  if (p.degree() < 1) return {};
  // g_0 = p, g_{k+1} = gcd(g_k, g_k'), s_k = g_k / g_{k+1}; exact-multiplicity part m is s_{m-1} / s_m.
  std::vector<IntPolynomial> g{p.primitive_part()};
  while (g.back().degree() > 0) g.push_back(gcd(g.back(), g.back().derivative()));
  std::vector<IntPolynomial> s;
  for (std::size_t k = 0; k + 1 < g.size(); ++k) {
    auto q = divide_exact(g[k], g[k + 1]);
    if (!q) throw Error("square-free decomposition: inexact division");
    s.push_back(q->primitive_part());
  }
  s.push_back(IntPolynomial::constant(1));
  std::vector<IntPolynomial> parts;
  for (std::size_t m = 1; m < s.size(); ++m) {
    auto q = divide_exact(s[m - 1], s[m]);
    if (!q) throw Error("square-free decomposition: inexact division");
    IntPolynomial part = q->primitive_part();
    if (part.leading() < 0) part = -part;
    parts.push_back(part);
  }
  while (!parts.empty() && parts.back().degree() == 0) parts.pop_back();
  return parts;
}

std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& p) {
  std::vector<IntPolynomial> seq{p.primitive_part()};
  if (p.degree() < 1) return seq;
  seq.push_back(p.derivative().primitive_part());
  while (seq.back().degree() > 0) {
    const IntPolynomial& a = seq[seq.size() - 2];
    const IntPolynomial& b = seq.back();
    IntPolynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // prem = lc(b)^(delta+1) * rem; negate to get -rem up to a positive factor.
    const int delta_plus_one = a.degree() - b.degree() + 1;
    const bool flip = sign(b.leading()) < 0 && (delta_plus_one % 2 == 1);
    r = r.primitive_part();
    seq.push_back(flip ? r : -r);
  }
  return seq;
}

namespace {

std::size_t variations(const std::vector<IntPolynomial>& seq, const mpq_class& x) {
  std::size_t v = 0;
  int last = 0;
  for (const auto& s : seq) {
    const int sg = sign_at(s, x);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++v;
    last = sg;
  }
  return v;
}

}  // namespace

std::size_t sturm_count(const std::vector<IntPolynomial>& seq, const mpq_class& a, const mpq_class& b) {
  const std::size_t va = variations(seq, a), vb = variations(seq, b);
  return va > vb ? va - vb : 0;
}

namespace {

struct Isolator {
  const IntPolynomial& f;
  std::vector<IntPolynomial> seq;
  mpq_class tol;
  std::size_t multiplicity;
  std::vector<RootInterval>& out;
  std::size_t budget = 100000;

  void spend() {
    if (budget-- == 0) throw ConvergenceError("real root isolation ran out of its iteration budget");
  }

  void refine(mpq_class a, mpq_class b) {
    const int sb = sign_at(f, b);
    if (sb == 0) {
      out.push_back({b, b, multiplicity, true});
      return;
    }
    while (b - a > tol) {
      spend();
      mpq_class mid = (a + b) / 2;
      const int sm = sign_at(f, mid);
      if (sm == 0) {
        out.push_back({mid, mid, multiplicity, true});
        return;
      }
      if (sm == sb) {
        b = mid;
      } else {
        a = mid;
      }
    }
    out.push_back({a, b, multiplicity, false});
  }

  void isolate(const mpq_class& a, const mpq_class& b, std::size_t count) {
    if (count == 0) return;
    spend();
    if (count == 1) {
      refine(a, b);
      return;
    }
    const mpq_class mid = (a + b) / 2;
    const std::size_t left = sturm_count(seq, a, mid);
    isolate(a, mid, left);
    isolate(mid, b, count - left);
  }
};

}  // namespace

std::vector<RootInterval> real_roots(const IntPolynomial& p, double tol) {
  if (p.is_zero()) throw InvalidArgument("the zero polynomial has no isolated roots");
  std::vector<RootInterval> out;
  const auto parts = squarefree_decomposition(p);
  mpq_class qtol(tol);
  for (std::size_t m = 0; m < parts.size(); ++m) {
    const IntPolynomial& f = parts[m];
    if (f.degree() < 1) continue;
    Isolator iso{f, sturm_sequence(f), qtol, m + 1, out};
    const mpq_class bound(cauchy_bound(f));
    iso.isolate(-bound, bound, sturm_count(iso.seq, -bound, bound));
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.upper < y.upper; });
  return out;
}

std::vector<double> real_roots_numeric(const IntPolynomial& p, double tol) {
  std::vector<double> out;
  for (const auto& r : real_roots(p, tol))
    for (std::size_t k = 0; k < r.multiplicity; ++k) out.push_back(r.approx());
  return out;
}

std::size_t count_distinct_real_roots(const IntPolynomial& p) {
  std::size_t total = 0;
  for (const auto& f : squarefree_decomposition(p)) {
    if (f.degree() < 1) continue;
    const auto seq = sturm_sequence(f);
    const mpq_class bound(cauchy_bound(f));
    total += sturm_count(seq, -bound, bound);
  }
  return total;
}

std::vector<RootInterval> certified_spectrum(const SpectrumFactorization& f, double tol) {
  std::vector<RootInterval> out;
  for (const auto& fac : f.factors()) {
    if (auto r = fac.poly.linear_root()) {
      mpq_class v(*r);
      out.push_back({v, v, fac.mult, true});
      continue;
    }
    for (auto root : real_roots(fac.poly, tol)) {
      root.multiplicity *= fac.mult;
      out.push_back(root);
    }
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.upper < y.upper; });
  return out;
}

std::vector<RootInterval> descending_roots(const SpectrumFactorization& f, double tol) {
  std::vector<RootInterval> out;
  for (const auto& r : certified_spectrum(f, tol))
    for (std::size_t k = 0; k < r.multiplicity; ++k) out.push_back({r.lower, r.upper, 1, r.exact});
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace powerspec
