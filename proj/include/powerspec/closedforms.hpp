#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "powerspec/factorization.hpp"
#include "powerspec/groups.hpp"
#include "powerspec/matrix.hpp"
#include "powerspec/spectral.hpp"

namespace powerspec {

enum class TheoremId {
  DL_ZpZp2,
  L_ZpZp2,
  DL_ElemAb,
  L_ElemAb,
  DL_Z2sdZ4,
  DL_ZrFpq,
  L_ZrFpq,
  DL_Fpqr_i,
  DL_Fpqr_ii,
  L_Fpqr_i,
  L_Fpqr_ii,
  DL_Gi5,
  L_Gi5,
  DL_ProperCyclic,
  DL_ProperDicyclic,
  L_ProperDicyclic,
};

std::vector<TheoremId> all_theorems();
std::string to_string(TheoremId id);
/// Accepts names such as "DL-ZpZp2" (case-sensitive).
TheoremId theorem_from_string(const std::string& s);

using Params = std::map<std::string, std::uint64_t>;

/// "p=7,q=3,r=2" -> {p:7, q:3, r:2}
Params parse_params(const std::string& text);
std::string params_to_string(const Params& params);

/// Required parameter names, in display order.
std::vector<std::string> theorem_parameters(TheoremId id);

/// The group, matrix and proper flag a theorem speaks about.
GroupSpec theorem_group(TheoremId id, const Params& params);
bool theorem_is_proper(TheoremId id);
MatrixKind theorem_matrix(TheoremId id);

struct CrossCheck {
  std::string name;
  bool ok;
};

struct ClosedFormReport {
  TheoremId id{};
  Params params;
  /// The factorization as stated, with every exponent evaluated.
  SpectrumFactorization factorization;
  /// Order of the graph the statement describes.
  std::size_t graph_order = 0;
  std::vector<std::string> caveats;
  /// Dimension-consistent candidate, present for flagged statements.
  std::optional<SpectrumFactorization> alternative;
  std::string alternative_note;
  std::vector<CrossCheck> cross_checks;
};

ClosedFormReport dl_zp_zp2(std::uint64_t p);
ClosedFormReport l_zp_zp2(std::uint64_t p);
ClosedFormReport dl_elem_abelian(std::uint64_t p);
ClosedFormReport l_elem_abelian(std::uint64_t p);
ClosedFormReport dl_z2_semidirect_z4();
ClosedFormReport dl_zr_fpq(std::uint64_t r, std::uint64_t p, std::uint64_t q);
ClosedFormReport l_zr_fpq(std::uint64_t r, std::uint64_t p, std::uint64_t q);

enum class FpqrCase { I, II };
/// Case I needs q = 3 or r = 3, case II needs q, r != 3.
ClosedFormReport dl_f_pqr(std::uint64_t p, std::uint64_t q, std::uint64_t r, FpqrCase c);
ClosedFormReport l_f_pqr(std::uint64_t p, std::uint64_t q, std::uint64_t r, FpqrCase c);
ClosedFormReport dl_g_i5(std::uint64_t p, std::uint64_t q, std::uint64_t r);
ClosedFormReport l_g_i5(std::uint64_t p, std::uint64_t q, std::uint64_t r);
ClosedFormReport dl_proper_cyclic(std::uint64_t n);
ClosedFormReport dl_proper_dicyclic(std::uint64_t n);
ClosedFormReport l_proper_dicyclic(std::uint64_t n);

ClosedFormReport evaluate_theorem(TheoremId id, const Params& params);

/// Laplacian factorization of a connected graph of order n with diameter
/// at most 2 -> its distance Laplacian factorization: one zero root is kept
/// and every other root lambda becomes 2n - lambda.
SpectrumFactorization diameter2_transform(const SpectrumFactorization& lap, std::size_t n);

/// The 6x6 matrices attached to the Z_r x F_{p,q} statements, as printed.
IntMatrix zr_fpq_distance_matrix(std::uint64_t r, std::uint64_t p, std::uint64_t q);
IntMatrix zr_fpq_laplacian_matrix(std::uint64_t r, std::uint64_t p, std::uint64_t q);
/// Expanded quartic printed for psi(x).
IntPolynomial zr_fpq_psi_expanded(std::uint64_t r, std::uint64_t p, std::uint64_t q);

/// The cubics g(x) and h(x) of the F_{p,qr} case I statements.
IntPolynomial fpqr_g(std::uint64_t p, std::uint64_t q, std::uint64_t r);
IntPolynomial fpqr_h(std::uint64_t p, std::uint64_t q, std::uint64_t r);

/// Quotient of D^L(P*(Z_n)) over {generators, order-d classes} built from
/// totients and divisor-graph distances (capped at 2).
IntMatrix proper_cyclic_quotient(std::uint64_t n);

}  // namespace powerspec
