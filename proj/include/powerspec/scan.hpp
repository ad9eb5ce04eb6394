#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "powerspec/factorization.hpp"

namespace powerspec {

enum class Classification { PrimePower, TwoDistinctPrimes, Other };

std::string to_string(Classification c);
Classification classify(std::uint64_t n);

/// One row of the integrality scan over P(Z_n).
struct ConjectureRow {
  std::uint64_t n = 0;
  Classification classification{};
  bool algebraic_connectivity_integral = false;
  bool laplacian_integral = false;
  bool largest_dl_integral = false;
  bool distance_laplacian_integral = false;
  /// Some pair of the three Laplacian statements disagrees.
  bool laplacian_violation = false;
  /// Some pair of the three distance Laplacian statements disagrees.
  bool distance_violation = false;
  /// Factors without integer roots, kept for every non-integral spectrum.
  std::vector<Factor> laplacian_residual;
  std::vector<Factor> distance_residual;
};

ConjectureRow scan_row(std::uint64_t n);

/// Rows for 2 <= n <= n_max, in order of n. threads == 0 means
/// scan_threads_from_env().
std::vector<ConjectureRow> scan_integrality(std::uint64_t n_max, unsigned threads = 0);

/// TOOL_THREADS, then POWERSPEC_THREADS, else 1. Values are clamped to [1, 64].
unsigned scan_threads_from_env();

}  // namespace powerspec
