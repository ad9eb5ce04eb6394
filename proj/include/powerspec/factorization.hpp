#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "powerspec/polynomial.hpp"

namespace powerspec {

struct Factor {
  IntPolynomial poly;
  std::size_t mult = 0;
};

/// Multiset of (factor, multiplicity) pairs. Factors keep insertion order;
/// adding an existing factor raises its multiplicity.
class SpectrumFactorization {
 public:
  SpectrumFactorization() = default;

  /// Non-constant factors only; multiplicity 0 is ignored.
  void add(const IntPolynomial& poly, std::size_t mult = 1);
  void add_root(const mpz_class& root, std::size_t mult = 1) { add(IntPolynomial::linear(root), mult); }
  void merge(const SpectrumFactorization& other);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool empty() const noexcept { return factors_.empty(); }

  std::size_t product_degree() const;
  IntPolynomial expand() const;

  /// Multiplicity of the given polynomial as listed (0 when absent).
  std::size_t listed_multiplicity(const IntPolynomial& poly) const;

  /// Integer roots of the linear factors with their multiplicities.
  std::map<mpz_class, std::size_t> integer_roots() const;

  /// Factors of degree >= 2, or non-monic linear ones.
  std::vector<Factor> nonlinear_factors() const;

  /// "x(x-8)(x-12)^{2}(x-15)^{4}"
  std::string latex() const;

  /// Same multiset of factors, ignoring order.
  bool same_multiset(const SpectrumFactorization& other) const;

 private:
  std::vector<Factor> factors_;
};

}  // namespace powerspec
