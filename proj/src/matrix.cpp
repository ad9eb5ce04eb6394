#include "powerspec/matrix.hpp"

#include "powerspec/error.hpp"

namespace powerspec {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) : n_(rows.size()), a_(n_ * n_) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != n_) throw InvalidArgument("matrix rows must all have length n");
    std::size_t j = 0;
    for (long v : row) a_[i * n_ + j++] = v;
    ++i;
  }
}

mpz_class IntMatrix::trace() const {
  mpz_class t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

mpz_class IntMatrix::row_sum(std::size_t i) const {
  mpz_class s = 0;
  for (std::size_t j = 0; j < n_; ++j) s += (*this)(i, j);
  return s;
}

bool IntMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

mpz_class IntMatrix::frobenius_squared() const {
  mpz_class s = 0;
  for (const auto& v : a_) s += v * v;
  return s;
}

mpz_class IntMatrix::max_abs() const {
  mpz_class m = 0;
  for (const auto& v : a_)
    if (abs(v) > m) m = abs(v);
  return m;
}

std::string IntMatrix::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < n_; ++i) {
    out += "[";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) out += ", ";
      out += (*this)(i, j).get_str();
    }
    out += "]\n";
  }
  return out;
}

bool RationalMatrix::is_integral() const {
  for (const auto& v : a_)
    if (v.get_den() != 1) return false;
  return true;
}

IntMatrix RationalMatrix::to_integer() const {
  IntMatrix m(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      const mpq_class& v = (*this)(i, j);
      if (v.get_den() != 1) throw Error("rational matrix has a non-integer entry");
      m(i, j) = v.get_num();
    }
  return m;
}

}  // namespace powerspec
