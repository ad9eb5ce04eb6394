#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace powerspec {

/// Polynomial with arbitrary-precision integer coefficients, ascending order.
/// The zero polynomial has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> ascending);
  IntPolynomial(std::initializer_list<long> ascending);

  static IntPolynomial constant(const mpz_class& c);
  static IntPolynomial x();
  /// x - root
  static IntPolynomial linear(const mpz_class& root);
  /// x^2 - s x + p
  static IntPolynomial quadratic(const mpz_class& sum, const mpz_class& product);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const std::vector<mpz_class>& coeffs() const noexcept { return c_; }
  mpz_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }
  const mpz_class& leading() const;

  /// Root of a monic linear polynomial.
  std::optional<mpz_class> linear_root() const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);
  IntPolynomial& operator*=(const mpz_class& k);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend IntPolynomial operator*(IntPolynomial a, const mpz_class& k) { return a *= k; }
  bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
  bool operator!=(const IntPolynomial& o) const { return !(*this == o); }

  IntPolynomial pow(std::size_t k) const;
  IntPolynomial derivative() const;

  mpz_class eval(const mpz_class& x) const;
  mpq_class eval(const mpq_class& x) const;
  double eval(double x) const;

  /// p(a x + b)
  IntPolynomial substitute_linear(const mpz_class& a, const mpz_class& b) const;

  /// gcd of coefficients, nonnegative.
  mpz_class content() const;
  /// Divided by content, sign of leading coefficient kept.
  IntPolynomial primitive_part() const;

  /// "x^3 - 6*x^2 + 11*x - 6"
  std::string to_string() const;
  /// "x^{3}-6x^{2}+11x-6"
  std::string latex() const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

/// q with a = q*b exactly over Z, or nullopt.
std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b);

/// Quotient and remainder by a monic divisor.
std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& a, const IntPolynomial& b);

/// lc(b)^(deg a - deg b + 1) * a mod b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd with positive leading coefficient (gcd(0,0) = 0).
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Number of times b divides a (b non-constant, a nonzero).
std::size_t multiplicity_of(const IntPolynomial& a, const IntPolynomial& b);

}  // namespace powerspec
