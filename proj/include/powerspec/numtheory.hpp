#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace powerspec {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Prime factorization by trial division, ascending primes.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// All positive divisors in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

bool is_prime_power(std::uint64_t n);

/// Multiplicative order of v modulo m; 0 when gcd(v, m) != 1.
std::uint64_t multiplicative_order(std::uint64_t v, std::uint64_t m);

/// Smallest v in [2, m) whose multiplicative order modulo m equals `order`.
std::optional<std::uint64_t> smallest_of_order(std::uint64_t order, std::uint64_t m);

/// Every v in [1, m) with multiplicative order `order` modulo m.
std::vector<std::uint64_t> elements_of_order(std::uint64_t order, std::uint64_t m);

}  // namespace powerspec
