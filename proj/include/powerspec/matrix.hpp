#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace powerspec {

/// Dense square matrix over Z, row-major.
class IntMatrix {
 public:
  explicit IntMatrix(std::size_t n = 0) : n_(n), a_(n * n) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t size() const noexcept { return n_; }
  mpz_class& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  mpz_class trace() const;
  mpz_class row_sum(std::size_t i) const;
  bool is_symmetric() const;
  /// Squared Frobenius norm.
  mpz_class frobenius_squared() const;
  mpz_class max_abs() const;

  bool operator==(const IntMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

  std::string to_string() const;

 private:
  std::size_t n_;
  std::vector<mpz_class> a_;
};

/// Dense square matrix over Q.
class RationalMatrix {
 public:
  explicit RationalMatrix(std::size_t n = 0) : n_(n), a_(n * n) {}

  std::size_t size() const noexcept { return n_; }
  mpq_class& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const mpq_class& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  bool is_integral() const;
  /// Throws unless every entry is an integer.
  IntMatrix to_integer() const;

 private:
  std::size_t n_;
  std::vector<mpq_class> a_;
};

}  // namespace powerspec
