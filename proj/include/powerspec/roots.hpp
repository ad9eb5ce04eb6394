#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "powerspec/factorization.hpp"
#include "powerspec/polynomial.hpp"

namespace powerspec {

/// Integer roots with multiplicities as linear factors (ascending roots),
/// followed by the residual factor (which has no integer root) when its
/// degree is positive. Requires a monic polynomial.
SpectrumFactorization integer_root_factorization(const IntPolynomial& p);

/// A real root certified to lie in [lower, upper]. exact means
/// lower == upper is the root itself.
struct RootInterval {
  mpq_class lower;
  mpq_class upper;
  std::size_t multiplicity = 1;
  bool exact = false;

  double approx() const { return (lower.get_d() + upper.get_d()) / 2.0; }
};

inline constexpr double kRootTolerance = 1e-9;

/// Square-free decomposition: result[m-1] is the product of the distinct
/// roots of multiplicity exactly m (constant 1 when there are none).
std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& p);

/// Sturm sequence of a square-free polynomial, primitive parts.
std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& p);

/// Distinct real roots in (a, b] of the square-free polynomial whose Sturm
/// sequence is given.
std::size_t sturm_count(const std::vector<IntPolynomial>& seq, const mpq_class& a, const mpq_class& b);

/// All real roots, ascending, each isolated to width <= tol.
/// Throws ConvergenceError when the iteration budget runs out.
std::vector<RootInterval> real_roots(const IntPolynomial& p, double tol = kRootTolerance);

/// Approximations of real_roots().
std::vector<double> real_roots_numeric(const IntPolynomial& p, double tol = kRootTolerance);

/// Number of distinct real roots.
std::size_t count_distinct_real_roots(const IntPolynomial& p);

/// Every root of the factorization, ascending, multiplicities expanded into
/// the multiplicity field. Linear factors give exact entries.
std::vector<RootInterval> certified_spectrum(const SpectrumFactorization& f, double tol = kRootTolerance);

/// certified_spectrum flattened to one entry per root (with repetition),
/// in descending order, which is the usual eigenvalue indexing.
std::vector<RootInterval> descending_roots(const SpectrumFactorization& f, double tol = kRootTolerance);

}  // namespace powerspec
