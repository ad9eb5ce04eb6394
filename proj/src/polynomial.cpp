#include "powerspec/polynomial.hpp"

#include <cmath>

#include "powerspec/error.hpp"

namespace powerspec {

IntPolynomial::IntPolynomial(std::vector<mpz_class> ascending) : c_(std::move(ascending)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending) {
  for (long v : ascending) c_.emplace_back(v);
  trim();
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) { return IntPolynomial(std::vector<mpz_class>{c}); }
IntPolynomial IntPolynomial::x() { return IntPolynomial{0, 1}; }
IntPolynomial IntPolynomial::linear(const mpz_class& root) {
  return IntPolynomial(std::vector<mpz_class>{-root, 1});
}
IntPolynomial IntPolynomial::quadratic(const mpz_class& sum, const mpz_class& product) {
  return IntPolynomial(std::vector<mpz_class>{product, -sum, 1});
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& IntPolynomial::leading() const {
  if (c_.empty()) throw Error("zero polynomial has no leading coefficient");
  return c_.back();
}

std::optional<mpz_class> IntPolynomial::linear_root() const {
  if (degree() != 1 || c_[1] != 1) return std::nullopt;
  return mpz_class(-c_[0]);
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<mpz_class> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), c_[i].get_mpz_t(), o.c_[j].get_mpz_t());
  }
  c_ = std::move(r);
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const mpz_class& k) {
  for (auto& v : c_) v *= k;
  trim();
  return *this;
}

IntPolynomial IntPolynomial::pow(std::size_t k) const {
  IntPolynomial result = constant(1), base = *this;
  while (k) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

IntPolynomial IntPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpz_class> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(r));
}

mpz_class IntPolynomial::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

mpq_class IntPolynomial::eval(const mpq_class& x) const {
  // Horner on numerator / denominator to avoid repeated canonicalisation.
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  mpz_class acc = 0, dpow = 1;
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = acc * num + c_[i] * dpow;
    dpow *= den;
  }
  // acc / den^deg
  mpz_class denom = 1;
  if (!c_.empty()) mpz_pow_ui(denom.get_mpz_t(), den.get_mpz_t(), c_.size() - 1);
  mpq_class r(acc, denom);
  r.canonicalize();
  return r;
}

double IntPolynomial::eval(double x) const {
  double acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].get_d();
  return acc;
}

IntPolynomial IntPolynomial::substitute_linear(const mpz_class& a, const mpz_class& b) const {
  const IntPolynomial inner(std::vector<mpz_class>{b, a});
  IntPolynomial acc;
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc *= inner;
    acc += constant(c_[i]);
  }
  return acc;
}

mpz_class IntPolynomial::content() const {
  mpz_class g = 0;
  for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (c_.empty()) return {};
  const mpz_class g = content();
  IntPolynomial r = *this;
  for (auto& v : r.c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return r;
}

namespace {

std::string term(const std::string& var, std::size_t i, bool latex) {
  if (i == 0) return "";
  if (i == 1) return var;
  return latex ? var + "^{" + std::to_string(i) + "}" : var + "^" + std::to_string(i);
}

std::string render(const std::vector<mpz_class>& c, bool latex) {
  if (c.empty()) return "0";
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    mpz_class a = abs(c[i]);
    const bool neg = c[i] < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += latex ? (neg ? "-" : "+") : (neg ? " - " : " + ");
    }
    if (i == 0 || a != 1) {
      out += a.get_str();
      if (i > 0 && !latex) out += "*";
    }
    out += term("x", i, latex);
  }
  return out;
}

}  // namespace

std::string IntPolynomial::to_string() const { return render(c_, false); }
std::string IntPolynomial::latex() const { return render(c_, true); }

std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw InvalidArgument("division by the zero polynomial");
  if (a.is_zero()) return IntPolynomial{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<mpz_class> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<mpz_class> q(r.size() - db);
  const mpz_class& lc = bc.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    mpz_class& top = r[k + db];
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    if (q[k] != 0)
      for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[k + j].get_mpz_t(), q[k].get_mpz_t(), bc[j].get_mpz_t());
  }
  for (std::size_t i = 0; i < db; ++i)
    if (r[i] != 0) return std::nullopt;
  return IntPolynomial(std::move(q));
}

std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& a, const IntPolynomial& b) {
  if (!b.is_monic()) throw InvalidArgument("divmod_monic needs a monic divisor");
  if (a.degree() < b.degree()) return {IntPolynomial{}, a};
  std::vector<mpz_class> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<mpz_class> q(r.size() - db);
  for (std::size_t k = q.size(); k-- > 0;) {
    q[k] = r[k + db];
    if (q[k] != 0)
      for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[k + j].get_mpz_t(), q[k].get_mpz_t(), bc[j].get_mpz_t());
  }
  r.resize(db);
  return {IntPolynomial(std::move(q)), IntPolynomial(std::move(r))};
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw InvalidArgument("pseudo-remainder by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<mpz_class> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const mpz_class& lc = bc.back();
  for (std::size_t top = r.size() - 1;; --top) {
    const mpz_class t = r[top];
    for (auto& v : r) v *= lc;
    if (t != 0)
      for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[top - db + j].get_mpz_t(), t.get_mpz_t(), bc[j].get_mpz_t());
    if (top == db) break;
  }
  r.resize(db);
  return IntPolynomial(std::move(r));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial u = a.primitive_part(), v = b.primitive_part();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPolynomial r = pseudo_remainder(u, v).primitive_part();
    u = std::move(v);
    v = std::move(r);
  }
  if (!u.is_zero() && u.leading() < 0) u = -u;
  return u;
}

std::size_t multiplicity_of(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.degree() < 1) throw InvalidArgument("multiplicity_of needs a non-constant divisor");
  if (a.is_zero()) throw InvalidArgument("multiplicity_of needs a nonzero dividend");
  std::size_t k = 0;
  IntPolynomial cur = a;
  while (auto q = divide_exact(cur, b)) {
    cur = std::move(*q);
    ++k;
  }
  return k;
}

}  // namespace powerspec
