#pragma once

#include <cstddef>

#include "powerspec/matrix.hpp"
#include "powerspec/polynomial.hpp"

namespace powerspec {

/// Monic det(xI - M) by Berkowitz's division-free algorithm, O(n^4) over Z.
IntPolynomial charpoly_berkowitz(const IntMatrix& m);

/// Monic det(xI - M) by Hessenberg reduction modulo 62-bit primes and CRT.
/// Enough primes are used to exceed twice the bound
/// sum |c_k| <= (1 + ||M||_F / sqrt(n))^n, so the result is exact.
IntPolynomial charpoly_multimodular(const IntMatrix& m);

/// Size at or above which charpoly() switches to the multimodular route.
inline constexpr std::size_t kMultimodularThreshold = 24;

IntPolynomial charpoly(const IntMatrix& m);

}  // namespace powerspec
