#include "powerspec/charpoly.hpp"

#include <cmath>
#include <cstdint>
#include <mutex>
#include <vector>

#include "powerspec/error.hpp"
#include "powerspec/numtheory.hpp"

namespace powerspec {

IntPolynomial charpoly_berkowitz(const IntMatrix& m) {
  const std::size_t n = m.size();
  // Descending coefficients of the charpoly of the leading k x k block.
  std::vector<mpz_class> poly{1};
  std::vector<mpz_class> col, v, w;
  for (std::size_t k = 0; k < n; ++k) {
    // Block [[A, C], [R, a]] with A the leading k x k part.
    col.assign(k + 2, 0);
    col[0] = 1;
    col[1] = -m(k, k);
    v.resize(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = m(i, k);
    for (std::size_t j = 2; j <= k + 1; ++j) {
      mpz_class dot = 0;
      for (std::size_t i = 0; i < k; ++i) mpz_addmul(dot.get_mpz_t(), m(k, i).get_mpz_t(), v[i].get_mpz_t());
      col[j] = -dot;
      if (j == k + 1) break;
      w.assign(k, 0);
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) mpz_addmul(w[r].get_mpz_t(), m(r, c).get_mpz_t(), v[c].get_mpz_t());
      v.swap(w);
    }
    // Toeplitz product: next[i] = sum_j col[i-j] * poly[j].
    std::vector<mpz_class> next(k + 2);
    for (std::size_t i = 0; i < k + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, k); ++j)
        mpz_addmul(next[i].get_mpz_t(), col[i - j].get_mpz_t(), poly[j].get_mpz_t());
    poly.swap(next);
  }
  return IntPolynomial(std::vector<mpz_class>(poly.rbegin(), poly.rend()));
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Multiplication by a fixed operand modulo p < 2^63 (Shoup).
struct FixedMul {
  u64 w;
  u64 w_pre;
  u64 p;
  FixedMul(u64 w_, u64 p_) : w(w_), w_pre(static_cast<u64>((static_cast<u128>(w_) << 64) / p_)), p(p_) {}
  u64 operator()(u64 x) const {
    const u64 q = static_cast<u64>((static_cast<u128>(w_pre) * x) >> 64);
    u64 r = w * x - q * p;
    return r >= p ? r - p : r;
  }
};

inline u64 add_mod(u64 a, u64 b, u64 p) {
  const u64 s = a + b;
  return s >= p ? s - p : s;
}
inline u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

const std::vector<u64>& primes_at_least(std::size_t count) {
  static std::mutex mu;
  static std::vector<u64> primes;
  std::lock_guard<std::mutex> lock(mu);
  u64 c = primes.empty() ? (u64{1} << 62) - 1 : primes.back() - 2;
  while (primes.size() < count) {
    if (is_prime(c)) primes.push_back(c);
    c -= 2;
  }
  return primes;
}

/// Charpoly of m mod p, ascending, monic, length n+1.
std::vector<u64> charpoly_mod(const IntMatrix& m, u64 p) {
  const std::size_t n = m.size();
  std::vector<u64> h(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h[i * n + j] = mpz_fdiv_ui(m(i, j).get_mpz_t(), p);
  auto at = [&](std::size_t i, std::size_t j) -> u64& { return h[i * n + j]; };

  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && at(piv, j) == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(at(piv, c), at(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(at(r, piv), at(r, j + 1));
    }
    const u64 inv = pow_mod(at(j + 1, j), p - 2, p);
    const FixedMul by_inv(inv, p);
    for (std::size_t r = j + 2; r < n; ++r) {
      if (at(r, j) == 0) continue;
      const u64 u = by_inv(at(r, j));
      const FixedMul by_u(u, p);
      u64* row_r = &h[r * n];
      const u64* row_p = &h[(j + 1) * n];
      for (std::size_t c = j; c < n; ++c) row_r[c] = sub_mod(row_r[c], by_u(row_p[c]), p);
      for (std::size_t rr = 0; rr < n; ++rr) at(rr, j + 1) = add_mod(at(rr, j + 1), by_u(at(rr, r)), p);
    }
  }

  // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}, 1-based.
  std::vector<std::vector<u64>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    const auto& prev = polys[k - 1];
    std::vector<u64> cur(k + 1, 0);
    const u64 diag = at(k - 1, k - 1);
    const FixedMul by_diag(diag, p);
    for (std::size_t d = 0; d < k; ++d) {
      cur[d + 1] = add_mod(cur[d + 1], prev[d], p);
      cur[d] = sub_mod(cur[d], by_diag(prev[d]), p);
    }
    u64 t = 1;
    for (std::size_t i = k - 1; i >= 1; --i) {
      t = FixedMul(t, p)(at(i, i - 1));
      if (t == 0) break;
      const u64 coef = FixedMul(at(i - 1, k - 1), p)(t);
      if (coef != 0) {
        const FixedMul by_coef(coef, p);
        const auto& older = polys[i - 1];
        for (std::size_t d = 0; d < older.size(); ++d) cur[d] = sub_mod(cur[d], by_coef(older[d]), p);
      }
    }
    polys[k] = std::move(cur);
  }
  return polys[n];
}

}  // namespace

IntPolynomial charpoly_multimodular(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return IntPolynomial::constant(1);
  const double frob = std::sqrt(m.frobenius_squared().get_d());
  const double bits = static_cast<double>(n) * std::log2(1.0 + frob / std::sqrt(static_cast<double>(n))) + 64.0;
  const std::size_t needed = static_cast<std::size_t>(std::ceil(bits / 61.0)) + 1;
  const auto& primes = primes_at_least(needed);

  std::vector<mpz_class> residue(n + 1, 0);
  mpz_class modulus = 1;
  mpz_class tmp;
  for (std::size_t k = 0; k < needed; ++k) {
    const u64 p = primes[k];
    const std::vector<u64> cp = charpoly_mod(m, p);
    if (k == 0) {
      for (std::size_t i = 0; i <= n; ++i) mpz_set_ui(residue[i].get_mpz_t(), cp[i]);
      modulus = static_cast<unsigned long>(p);
      continue;
    }
    const u64 mod_p = mpz_fdiv_ui(modulus.get_mpz_t(), p);
    const u64 inv = pow_mod(mod_p, p - 2, p);
    for (std::size_t i = 0; i <= n; ++i) {
      const u64 r = mpz_fdiv_ui(residue[i].get_mpz_t(), p);
      const u64 delta = mul_mod(sub_mod(cp[i], r, p), inv, p);
      if (delta != 0) {
        tmp = modulus;
        tmp *= static_cast<unsigned long>(delta);
        residue[i] += tmp;
      }
    }
    modulus *= static_cast<unsigned long>(p);
  }
  const mpz_class half = modulus / 2;
  for (auto& r : residue)
    if (r > half) r -= modulus;
  return IntPolynomial(std::move(residue));
}

IntPolynomial charpoly(const IntMatrix& m) {
  return m.size() >= kMultimodularThreshold ? charpoly_multimodular(m) : charpoly_berkowitz(m);
}

}  // namespace powerspec
