#include <doctest.h>

#include "powerspec/closedforms.hpp"
#include "powerspec/charpoly.hpp"
#include "powerspec/error.hpp"

using namespace powerspec;

namespace {

bool has_caveat(const ClosedFormReport& r, const std::string& needle) {
  for (const auto& c : r.caveats)
    if (c.find(needle) != std::string::npos) return true;
  return false;
}

std::optional<bool> cross_check(const ClosedFormReport& r, const std::string& needle) {
  for (const auto& c : r.cross_checks)
    if (c.name.find(needle) != std::string::npos) return c.ok;
  return std::nullopt;
}

}  // namespace

TEST_SUITE("closedforms") {
  TEST_CASE("theorem names round trip") {
    CHECK(all_theorems().size() == 16);
    for (TheoremId id : all_theorems()) CHECK(theorem_from_string(to_string(id)) == id);
    CHECK(to_string(TheoremId::DL_ZpZp2) == "DL-ZpZp2");
    CHECK_THROWS_AS(theorem_from_string("dl-zpzp2"), InvalidArgument);
    CHECK(theorem_parameters(TheoremId::DL_ZrFpq) == std::vector<std::string>{"r", "p", "q"});
    CHECK(theorem_is_proper(TheoremId::DL_ProperCyclic));
    CHECK_FALSE(theorem_is_proper(TheoremId::L_Gi5));
    CHECK(theorem_matrix(TheoremId::L_Fpqr_i) == MatrixKind::Laplacian);
  }

  TEST_CASE("parameter parsing") {
    CHECK(parse_params("p=7,q=3,r=2") == Params{{"p", 7}, {"q", 3}, {"r", 2}});
    CHECK(parse_params(" n = 12 ") == Params{{"n", 12}});
    CHECK(params_to_string(Params{{"q", 3}, {"p", 7}}) == "p=7,q=3");
    CHECK_THROWS_AS(parse_params("p"), InvalidArgument);
    CHECK_THROWS_AS(parse_params("p=x"), InvalidArgument);
    CHECK_THROWS_AS(parse_params("p=2,p=3"), InvalidArgument);
    CHECK_THROWS_AS(evaluate_theorem(TheoremId::DL_ZpZp2, {}), InvalidArgument);
    CHECK_THROWS_AS(evaluate_theorem(TheoremId::DL_ZpZp2, {{"p", 4}}), InvalidArgument);
    CHECK_THROWS_AS(evaluate_theorem(TheoremId::DL_ZpZp2, {{"p", 2}, {"z", 1}}), InvalidArgument);
    CHECK_NOTHROW(evaluate_theorem(TheoremId::DL_Gi5, {{"p", 5}, {"q", 3}, {"r", 2}, {"i", 2}}));
  }

  TEST_CASE("small closed forms") {
    CHECK(dl_z2_semidirect_z4().factorization.latex() == "x(x-8)(x-12)^{2}(x-15)^{4}");
    CHECK(dl_elem_abelian(2).factorization.latex() == "x(x-8)(x-15)^{6}");
    CHECK(l_elem_abelian(2).factorization.latex() == "x(x-8)(x-1)^{6}");
    CHECK(dl_zp_zp2(2).factorization.latex() == "x(x-8)(x-14)(x-10)(x-12)^{2}(x-15)^{2}");
    CHECK(dl_proper_dicyclic(2).factorization.latex() == "x(x-7)(x-11)^{3}(x-13)^{2}");
    CHECK(l_proper_dicyclic(2).factorization.latex() == "x(x-3)^{3}(x-1)^{2}(x-7)");
    CHECK(dl_proper_cyclic(6).factorization.latex() == "x(x-5)^{2}(x-6)(x-8)");
    CHECK(dl_g_i5(5, 3, 2).factorization.latex() == "x(x-30)(x-51)(x-59)^{15}(x-47)^{3}(x-45)^{8}(x-49)");

    const auto e3 = dl_elem_abelian(3);
    CHECK(e3.factorization.listed_multiplicity(IntPolynomial::linear(51)) == 13);
    CHECK(e3.factorization.product_degree() == 27);
  }

  TEST_CASE("degrees match the graph order") {
    const std::vector<std::pair<TheoremId, Params>> cases = {
        {TheoremId::DL_ZpZp2, {{"p", 3}}},
        {TheoremId::L_ZpZp2, {{"p", 5}}},
        {TheoremId::DL_ElemAb, {{"p", 3}}},
        {TheoremId::L_ElemAb, {{"p", 5}}},
        {TheoremId::DL_Z2sdZ4, {}},
        {TheoremId::DL_Gi5, {{"p", 5}, {"q", 3}, {"r", 2}}},
        {TheoremId::DL_ProperCyclic, {{"n", 30}}},
        {TheoremId::DL_ProperDicyclic, {{"n", 4}}},
        {TheoremId::L_ProperDicyclic, {{"n", 8}}},
    };
    for (const auto& [id, params] : cases) {
      CAPTURE(to_string(id));
      const auto r = evaluate_theorem(id, params);
      CHECK(r.factorization.product_degree() == r.graph_order);
      CHECK(r.factorization.expand().is_monic());
    }
    CHECK(dl_zp_zp2(3).graph_order == 27);
    CHECK(dl_proper_dicyclic(3).graph_order == 11);
  }

  TEST_CASE("diameter-two transform") {
    SpectrumFactorization star;
    star.add_root(0);
    star.add_root(1, 2);
    star.add_root(4);
    SpectrumFactorization want;
    want.add_root(0);
    want.add_root(7, 2);
    want.add_root(4);
    CHECK(diameter2_transform(star, 4).same_multiset(want));

    for (std::uint64_t p : {2, 3}) {
      CHECK(diameter2_transform(l_zp_zp2(p).factorization, p * p * p).same_multiset(dl_zp_zp2(p).factorization));
      CHECK(diameter2_transform(l_elem_abelian(p).factorization, p * p * p)
                .same_multiset(dl_elem_abelian(p).factorization));
    }
    SpectrumFactorization quad;
    quad.add_root(0);
    quad.add(IntPolynomial{-2, 0, 1});
    SpectrumFactorization quad_t;
    quad_t.add_root(0);
    quad_t.add(IntPolynomial{-2, 0, 1}.substitute_linear(-1, 6));
    CHECK(diameter2_transform(quad, 3).same_multiset(quad_t));
  }

  TEST_CASE("Z_r x F_{p,q} quartic and matrices") {
    CHECK(zr_fpq_psi_expanded(2, 7, 3) == IntPolynomial{2184, -2184, 533, -42, 1});

    const IntPolynomial lap = charpoly(zr_fpq_laplacian_matrix(2, 7, 3));
    const auto psi = divide_exact(lap, IntPolynomial::x() * IntPolynomial::linear(42));
    REQUIRE(psi);
    CHECK(*psi == zr_fpq_psi_expanded(2, 7, 3));
    CHECK(charpoly(zr_fpq_distance_matrix(2, 7, 3)).coeff(0) != 0);

    const auto l = l_zr_fpq(2, 7, 3);
    CHECK(cross_check(l, "quartic") == std::optional<bool>(true));
    REQUIRE(l.alternative);
    CHECK(l.alternative->product_degree() == 42);
    CHECK(l.factorization.product_degree() < 42);

    const auto dl = dl_zr_fpq(2, 11, 5);
    CHECK(dl.graph_order == 110);
    REQUIRE(dl.alternative);
    CHECK(dl.alternative->product_degree() == 110);
    CHECK(cross_check(dl, "eigenvalues 0") == std::optional<bool>(false));
    CHECK_FALSE(dl.alternative_note.empty());

    CHECK_THROWS_AS(dl_zr_fpq(2, 7, 5), InvalidArgument);
    CHECK_THROWS_AS(dl_zr_fpq(7, 7, 3), InvalidArgument);
  }

  TEST_CASE("F_{p,qr} preconditions") {
    CHECK_NOTHROW(dl_f_pqr(7, 3, 2, FpqrCase::I));
    CHECK_NOTHROW(l_f_pqr(11, 5, 2, FpqrCase::II));
    CHECK_THROWS_AS(dl_f_pqr(11, 5, 2, FpqrCase::I), InvalidArgument);
    CHECK_THROWS_AS(dl_f_pqr(7, 3, 2, FpqrCase::II), InvalidArgument);
    CHECK_THROWS_AS(dl_f_pqr(13, 5, 2, FpqrCase::II), InvalidArgument);
    CHECK(fpqr_g(7, 3, 2).degree() == 3);
    CHECK(fpqr_h(7, 3, 2).degree() == 3);
    const auto ii = dl_f_pqr(11, 5, 2, FpqrCase::II);
    CHECK(ii.graph_order == 110);
    CHECK(ii.factorization.product_degree() == 107);
    CHECK(has_caveat(ii, "degree"));
  }

  TEST_CASE("G_{i+5} candidate for r > 2") {
    CHECK_FALSE(dl_g_i5(5, 3, 2).alternative);
    const auto l = l_g_i5(13, 7, 3);
    REQUIRE(l.alternative);
    CHECK(l.alternative->listed_multiplicity(IntPolynomial::linear(3)) >= 91);
    const auto dl = dl_g_i5(13, 7, 3);
    REQUIRE(dl.alternative);
    CHECK(dl.alternative->listed_multiplicity(IntPolynomial::linear(2 * 273 - 3)) >= 91);
  }

  TEST_CASE("proper cyclic quotient") {
    const IntMatrix q = proper_cyclic_quotient(6);
    REQUIRE(q.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(q.row_sum(i) == 0);
    CHECK(has_caveat(dl_proper_cyclic(12), "t+1"));
    CHECK_THROWS_AS(dl_proper_cyclic(7), InvalidArgument);
    CHECK(has_caveat(dl_proper_dicyclic(3), "power of 2"));
    CHECK_FALSE(has_caveat(dl_proper_dicyclic(4), "power of 2"));
  }
}
