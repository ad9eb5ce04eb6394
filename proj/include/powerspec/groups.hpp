#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace powerspec {

using Element = std::uint32_t;

/// A finite group stored as an explicit multiplication table.
///
/// Elements are the indices 0..order()-1. The constructor checks closure,
/// the two-sided identity and the existence of two-sided inverses;
/// associativity is O(n^3) and is checked separately by
/// satisfies_group_axioms().
class FiniteGroup {
 public:
  FiniteGroup(std::size_t order, std::vector<Element> table, Element identity,
              std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return identity_; }
  Element op(Element a, Element b) const noexcept { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Element inverse(Element a) const noexcept { return inverses_[a]; }
  Element power(Element a, std::uint64_t k) const;

  std::size_t element_order(Element a) const noexcept { return orders_[a]; }
  const std::vector<std::size_t>& element_orders() const noexcept { return orders_; }

  /// Map order -> number of elements of that order.
  std::map<std::size_t, std::size_t> order_census() const;

  /// <a> listed as e, a, a^2, ...
  std::vector<Element> cyclic_subgroup(Element a) const;

  bool is_abelian() const;
  std::vector<Element> center() const;

  const std::string& label(Element a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

 private:
  std::size_t order_;
  std::vector<Element> table_;
  Element identity_;
  std::vector<std::string> labels_;
  std::vector<Element> inverses_;
  std::vector<std::size_t> orders_;
};

/// Associativity on every triple when order <= exhaustive_limit, otherwise on
/// `samples` pseudo-random triples drawn from a fixed seed.
bool satisfies_group_axioms(const FiniteGroup& g, std::size_t exhaustive_limit = 200,
                            std::size_t samples = 200000);

/// action[h][n] is the image of n under the automorphism attached to h.
using GroupAction = std::vector<std::vector<Element>>;

FiniteGroup make_cyclic(std::size_t n);
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// N ⋊ H with (n1,h1)(n2,h2) = (n1·φ_{h1}(n2), h1·h2).
/// Element (n,h) has index n·|H| + h. Throws InvalidArgument unless every
/// φ_h is an automorphism of N and h ↦ φ_h is a homomorphism.
FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h, const GroupAction& action);

/// Action of the cyclic group Z_m on a product of cyclic groups
/// Z_{n_1} × ... × Z_{n_k} (mixed radix, first factor most significant, the
/// layout produced by direct_product) in which the generator multiplies the
/// i-th coordinate by multipliers[i].
GroupAction cyclic_exponent_action(std::span<const std::uint64_t> cyclic_orders, std::uint64_t h_order,
                                   std::span<const std::uint64_t> multipliers);

FiniteGroup make_dihedral(std::size_t n);
FiniteGroup make_dicyclic(std::size_t n);

/// F_{p,q} = Z_p ⋊ Z_q; witness defaults to the smallest v of order q mod p.
FiniteGroup make_frobenius(std::uint64_t p, std::uint64_t q, std::optional<std::uint64_t> witness = std::nullopt);

/// F_{p,qr} = Z_p ⋊ Z_{qr} acting faithfully; requires p ≡ 1 (mod qr).
FiniteGroup make_f_p_qr(std::uint64_t p, std::uint64_t q, std::uint64_t r);

/// G_{i+5} = (Z_p × Z_q) ⋊ Z_r, generator acting by a ↦ a^{v^i}, b ↦ b^u.
FiniteGroup make_g_i5(std::uint64_t p, std::uint64_t q, std::uint64_t r, std::uint64_t i,
                      std::optional<std::uint64_t> u = std::nullopt, std::optional<std::uint64_t> v = std::nullopt);

FiniteGroup make_zp_zp2(std::uint64_t p);
FiniteGroup make_elementary_abelian_p3(std::uint64_t p);

/// <x,y : x^{p^2} = y^p = 1, y^{-1}xy = x^{p+1}> realised as Z_{p^2} ⋊ Z_p.
FiniteGroup make_zp2_semidirect_zp(std::uint64_t p);

}  // namespace powerspec

namespace powerspec {

enum class GroupFamily { Cyclic, Dihedral, Dicyclic, Frobenius, FPqr, Gi5, ZpZp2, ElemAbelianP3, ZpSdZp2 };

struct GroupFactor {
  GroupFamily family;
  std::vector<std::uint64_t> params;
};

/// Textual group description. A spec with several factors denotes their
/// direct product, left to right.
///
///   cyclic:12  dihedral:5  dicyclic:2  frobenius:7,3  fpqr:7,3,2
///   gi5:5,3,2[,i]  zpzp2:3  elemab3:3  zpsdzp2:2  cyclic:2 x frobenius:7,3
struct GroupSpec {
  std::vector<GroupFactor> factors;

  static GroupSpec parse(const std::string& text);
  std::string to_string() const;
  FiniteGroup build() const;
  std::uint64_t order() const;
};

}  // namespace powerspec
