#include "powerspec/groups.hpp"

#include <numeric>
#include <random>

#include "powerspec/error.hpp"
#include "powerspec/numtheory.hpp"

namespace powerspec {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidArgument(message);
}

void require_prime(std::uint64_t p, const char* name) {
  require(is_prime(p), std::string(name) + " = " + std::to_string(p) + " is not prime");
}

}  // namespace

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Element> table, Element identity,
                         std::vector<std::string> labels)
    : order_(order), table_(std::move(table)), identity_(identity), labels_(std::move(labels)) {
  require(order_ >= 1, "group order must be positive");
  require(table_.size() == order_ * order_, "multiplication table has the wrong size");
  require(identity_ < order_, "identity index out of range");
  for (Element x : table_) require(x < order_, "multiplication table is not closed");
  for (Element a = 0; a < order_; ++a) {
    require(op(identity_, a) == a && op(a, identity_) == a, "identity is not two-sided");
  }
  if (labels_.empty()) {
    labels_.reserve(order_);
    for (std::size_t i = 0; i < order_; ++i) labels_.push_back(std::to_string(i));
  }
  require(labels_.size() == order_, "label count differs from group order");

  inverses_.assign(order_, 0);
  for (Element a = 0; a < order_; ++a) {
    bool found = false;
    for (Element b = 0; b < order_; ++b) {
      if (op(a, b) == identity_ && op(b, a) == identity_) {
        inverses_[a] = b;
        found = true;
        break;
      }
    }
    require(found, "element " + labels_[a] + " has no two-sided inverse");
  }

  orders_.assign(order_, 0);
  for (Element a = 0; a < order_; ++a) {
    std::size_t k = 1;
    Element x = a;
    while (x != identity_) {
      x = op(x, a);
      ++k;
      require(k <= order_, "element " + labels_[a] + " has no finite order");
    }
    orders_[a] = k;
  }
}

Element FiniteGroup::power(Element a, std::uint64_t k) const {
  Element result = identity_;
  Element base = a;
  while (k > 0) {
    if (k & 1) result = op(result, base);
    base = op(base, base);
    k >>= 1;
  }
  return result;
}

std::map<std::size_t, std::size_t> FiniteGroup::order_census() const {
  std::map<std::size_t, std::size_t> census;
  for (std::size_t o : orders_) ++census[o];
  return census;
}

std::vector<Element> FiniteGroup::cyclic_subgroup(Element a) const {
  std::vector<Element> out{identity_};
  for (Element x = a; x != identity_; x = op(x, a)) out.push_back(x);
  return out;
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order_; ++a)
    for (Element b = a + 1; b < order_; ++b)
      if (op(a, b) != op(b, a)) return false;
  return true;
}

std::vector<Element> FiniteGroup::center() const {
  std::vector<Element> out;
  for (Element a = 0; a < order_; ++a) {
    bool central = true;
    for (Element b = 0; b < order_ && central; ++b) central = op(a, b) == op(b, a);
    if (central) out.push_back(a);
  }
  return out;
}

bool satisfies_group_axioms(const FiniteGroup& g, std::size_t exhaustive_limit, std::size_t samples) {
  const auto n = static_cast<Element>(g.order());
  if (g.order() <= exhaustive_limit) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        const Element ab = g.op(a, b);
        for (Element c = 0; c < n; ++c)
          if (g.op(ab, c) != g.op(a, g.op(b, c))) return false;
      }
    return true;
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<Element> pick(0, n - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    const Element a = pick(rng), b = pick(rng), c = pick(rng);
    if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c))) return false;
  }
  return true;
}

FiniteGroup make_cyclic(std::size_t n) {
  require(n >= 1, "cyclic group order must be at least 1");
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Element>((a + b) % n);
  return FiniteGroup(n, std::move(table), 0);
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t gn = g.order(), hn = h.order(), n = gn * hn;
  std::vector<Element> table(n * n);
  std::vector<std::string> labels(n);
  for (Element a = 0; a < gn; ++a)
    for (Element b = 0; b < hn; ++b) {
      const std::size_t x = a * hn + b;
      labels[x] = "(" + g.label(a) + "," + h.label(b) + ")";
      for (Element c = 0; c < gn; ++c)
        for (Element d = 0; d < hn; ++d) table[x * n + c * hn + d] = static_cast<Element>(g.op(a, c) * hn + h.op(b, d));
    }
  return FiniteGroup(n, std::move(table), static_cast<Element>(g.identity() * hn + h.identity()), std::move(labels));
}

FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h, const GroupAction& action) {
  const std::size_t nn = n.order(), hn = h.order();
  require(action.size() == hn, "action must assign an automorphism to every element of H");
  for (Element x = 0; x < hn; ++x) {
    const auto& phi = action[x];
    require(phi.size() == nn, "automorphism has the wrong domain size");
    std::vector<bool> hit(nn, false);
    for (Element a = 0; a < nn; ++a) {
      require(phi[a] < nn && !hit[phi[a]], "action image is not a bijection of N");
      hit[phi[a]] = true;
    }
    for (Element a = 0; a < nn; ++a)
      for (Element b = 0; b < nn; ++b)
        require(phi[n.op(a, b)] == n.op(phi[a], phi[b]), "action image is not a homomorphism of N");
  }
  for (Element a = 0; a < nn; ++a) require(action[h.identity()][a] == a, "identity of H must act trivially");
  for (Element x = 0; x < hn; ++x)
    for (Element y = 0; y < hn; ++y) {
      const auto& composite = action[h.op(x, y)];
      for (Element a = 0; a < nn; ++a)
        require(composite[a] == action[x][action[y][a]], "action is not a homomorphism H -> Aut(N)");
    }

  const std::size_t order = nn * hn;
  std::vector<Element> table(order * order);
  std::vector<std::string> labels(order);
  for (Element a = 0; a < nn; ++a)
    for (Element x = 0; x < hn; ++x) {
      const std::size_t left = a * hn + x;
      labels[left] = "(" + n.label(a) + ";" + h.label(x) + ")";
      for (Element b = 0; b < nn; ++b)
        for (Element y = 0; y < hn; ++y)
          table[left * order + b * hn + y] = static_cast<Element>(n.op(a, action[x][b]) * hn + h.op(x, y));
    }
  return FiniteGroup(order, std::move(table), static_cast<Element>(n.identity() * hn + h.identity()),
                     std::move(labels));
}

GroupAction cyclic_exponent_action(std::span<const std::uint64_t> cyclic_orders, std::uint64_t h_order,
                                   std::span<const std::uint64_t> multipliers) {
  require(cyclic_orders.size() == multipliers.size(), "one multiplier per cyclic factor is required");
  require(h_order >= 1, "acting group must be nontrivial or trivial, not empty");
  std::size_t nn = 1;
  for (std::size_t i = 0; i < cyclic_orders.size(); ++i) {
    const std::uint64_t m = cyclic_orders[i];
    require(m >= 1, "cyclic factor order must be positive");
    require(std::gcd(multipliers[i] % m, m) == 1 || m == 1, "multiplier is not a unit modulo its factor");
    require(pow_mod(multipliers[i], h_order, m) == 1 % m, "multiplier order does not divide |H|");
    nn *= m;
  }
  GroupAction action(h_order, std::vector<Element>(nn));
  std::vector<std::uint64_t> coords(cyclic_orders.size());
  for (std::uint64_t k = 0; k < h_order; ++k) {
    for (std::size_t x = 0; x < nn; ++x) {
      std::size_t rest = x;
      for (std::size_t i = cyclic_orders.size(); i-- > 0;) {
        coords[i] = rest % cyclic_orders[i];
        rest /= cyclic_orders[i];
      }
      std::size_t image = 0;
      for (std::size_t i = 0; i < cyclic_orders.size(); ++i) {
        const std::uint64_t m = cyclic_orders[i];
        image = image * m + mul_mod(coords[i], pow_mod(multipliers[i], k, m), m);
      }
      action[k][x] = static_cast<Element>(image);
    }
  }
  return action;
}

FiniteGroup make_dihedral(std::size_t n) {
  require(n >= 2, "dihedral group D_{2n} needs n >= 2");
  const std::uint64_t orders[] = {n};
  const std::uint64_t mult[] = {n - 1};
  FiniteGroup base = semidirect_product(make_cyclic(n), make_cyclic(2), cyclic_exponent_action(orders, 2, mult));
  std::vector<std::string> labels(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[2 * i] = "r^" + std::to_string(i);
    labels[2 * i + 1] = "r^" + std::to_string(i) + "s";
  }
  std::vector<Element> table(4 * n * n);
  for (Element a = 0; a < 2 * n; ++a)
    for (Element b = 0; b < 2 * n; ++b) table[a * 2 * n + b] = base.op(a, b);
  return FiniteGroup(2 * n, std::move(table), base.identity(), std::move(labels));
}

FiniteGroup make_dicyclic(std::size_t n) {
  require(n >= 2, "dicyclic group Q_n needs n >= 2");
  const std::size_t m = 2 * n, order = 4 * n;
  // a^i has index i, a^i b has index m + i.
  std::vector<Element> table(order * order);
  std::vector<std::string> labels(order);
  for (std::size_t i = 0; i < m; ++i) {
    labels[i] = "a^" + std::to_string(i);
    labels[m + i] = "a^" + std::to_string(i) + "b";
  }
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t i = x % m, j = y % m;
      const bool xb = x >= m, yb = y >= m;
      std::size_t result;
      if (!xb) {
        result = (i + j) % m + (yb ? m : 0);
      } else if (!yb) {
        result = m + (i + m - j) % m;
      } else {
        result = (i + m - j + n) % m;
      }
      table[x * order + y] = static_cast<Element>(result);
    }
  return FiniteGroup(order, std::move(table), 0, std::move(labels));
}

FiniteGroup make_frobenius(std::uint64_t p, std::uint64_t q, std::optional<std::uint64_t> witness) {
  require_prime(p, "p");
  require_prime(q, "q");
  require(p % q == 1, "F_{p,q} needs p ≡ 1 (mod q)");
  std::uint64_t v;
  if (witness) {
    v = *witness;
    require(multiplicative_order(v, p) == q, "witness does not have multiplicative order q modulo p");
  } else {
    v = *smallest_of_order(q, p);
  }
  const std::uint64_t orders[] = {p};
  const std::uint64_t mult[] = {v};
  return semidirect_product(make_cyclic(p), make_cyclic(q), cyclic_exponent_action(orders, q, mult));
}

FiniteGroup make_f_p_qr(std::uint64_t p, std::uint64_t q, std::uint64_t r) {
  require_prime(p, "p");
  require_prime(q, "q");
  require_prime(r, "r");
  require(q != r, "F_{p,qr} needs distinct primes q and r");
  require(p % (q * r) == 1, "F_{p,qr} needs p ≡ 1 (mod qr)");
  const std::uint64_t v = *smallest_of_order(q * r, p);
  const std::uint64_t orders[] = {p};
  const std::uint64_t mult[] = {v};
  return semidirect_product(make_cyclic(p), make_cyclic(q * r), cyclic_exponent_action(orders, q * r, mult));
}

FiniteGroup make_g_i5(std::uint64_t p, std::uint64_t q, std::uint64_t r, std::uint64_t i,
                      std::optional<std::uint64_t> u, std::optional<std::uint64_t> v) {
  require_prime(p, "p");
  require_prime(q, "q");
  require_prime(r, "r");
  require(p != q, "G_{i+5} needs p != q");
  require(p % r == 1, "G_{i+5} needs p ≡ 1 (mod r)");
  require(q % r == 1, "G_{i+5} needs q ≡ 1 (mod r)");
  require(i >= 1 && i <= r - 1, "G_{i+5} needs 1 <= i <= r-1");
  const std::uint64_t uu = u ? *u : *smallest_of_order(r, q);
  const std::uint64_t vv = v ? *v : *smallest_of_order(r, p);
  require(multiplicative_order(uu, q) == r, "u must have multiplicative order r modulo q");
  require(multiplicative_order(vv, p) == r, "v must have multiplicative order r modulo p");
  const std::uint64_t orders[] = {p, q};
  const std::uint64_t mult[] = {pow_mod(vv, i, p), uu};
  return semidirect_product(direct_product(make_cyclic(p), make_cyclic(q)), make_cyclic(r),
                            cyclic_exponent_action(orders, r, mult));
}

FiniteGroup make_zp_zp2(std::uint64_t p) {
  require_prime(p, "p");
  return direct_product(make_cyclic(p), make_cyclic(p * p));
}

FiniteGroup make_elementary_abelian_p3(std::uint64_t p) {
  require_prime(p, "p");
  const FiniteGroup z = make_cyclic(p);
  return direct_product(direct_product(z, z), z);
}

FiniteGroup make_zp2_semidirect_zp(std::uint64_t p) {
  require_prime(p, "p");
  const std::uint64_t orders[] = {p * p};
  const std::uint64_t mult[] = {p + 1};
  return semidirect_product(make_cyclic(p * p), make_cyclic(p), cyclic_exponent_action(orders, p, mult));
}

}  // namespace powerspec
