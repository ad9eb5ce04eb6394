#include "powerspec/factorization.hpp"

#include <algorithm>

#include "powerspec/error.hpp"

namespace powerspec {

void SpectrumFactorization::add(const IntPolynomial& poly, std::size_t mult) {
  if (mult == 0) return;
  if (poly.degree() < 1) throw InvalidArgument("spectrum factors must be non-constant");
  for (auto& f : factors_) {
    if (f.poly == poly) {
      f.mult += mult;
      return;
    }
  }
  factors_.push_back({poly, mult});
}

void SpectrumFactorization::merge(const SpectrumFactorization& other) {
  for (const auto& f : other.factors_) add(f.poly, f.mult);
}

std::size_t SpectrumFactorization::product_degree() const {
  std::size_t d = 0;
  for (const auto& f : factors_) d += static_cast<std::size_t>(f.poly.degree()) * f.mult;
  return d;
}

IntPolynomial SpectrumFactorization::expand() const {
  IntPolynomial r = IntPolynomial::constant(1);
  for (const auto& f : factors_) r *= f.poly.pow(f.mult);
  return r;
}

std::size_t SpectrumFactorization::listed_multiplicity(const IntPolynomial& poly) const {
  for (const auto& f : factors_)
    if (f.poly == poly) return f.mult;
  return 0;
}

std::map<mpz_class, std::size_t> SpectrumFactorization::integer_roots() const {
  std::map<mpz_class, std::size_t> out;
  for (const auto& f : factors_)
    if (auto r = f.poly.linear_root()) out[*r] += f.mult;
  return out;
}

std::vector<Factor> SpectrumFactorization::nonlinear_factors() const {
  std::vector<Factor> out;
  for (const auto& f : factors_)
    if (!f.poly.linear_root()) out.push_back(f);
  return out;
}

std::string SpectrumFactorization::latex() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& f : factors_) {
    const bool bare_x = f.poly == IntPolynomial::x();
    std::string body = bare_x ? "x" : "(" + f.poly.latex() + ")";
    out += body;
    if (f.mult > 1) out += "^{" + std::to_string(f.mult) + "}";
  }
  return out;
}

bool SpectrumFactorization::same_multiset(const SpectrumFactorization& other) const {
  if (factors_.size() != other.factors_.size()) return false;
  for (const auto& f : factors_)
    if (other.listed_multiplicity(f.poly) != f.mult) return false;
  return true;
}

}  // namespace powerspec
