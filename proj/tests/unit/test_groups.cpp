#include <doctest.h>

#include "powerspec/error.hpp"
#include "powerspec/groups.hpp"
#include "powerspec/numtheory.hpp"

using namespace powerspec;

namespace {

using Census = std::map<std::size_t, std::size_t>;

bool commutes_everywhere(const FiniteGroup& g) { return g.is_abelian(); }

}  // namespace

TEST_SUITE("groups") {
  TEST_CASE("cyclic groups") {
    const FiniteGroup z1 = make_cyclic(1);
    CHECK(z1.order() == 1);
    CHECK(z1.element_order(z1.identity()) == 1);

    const FiniteGroup z6 = make_cyclic(6);
    CHECK(z6.element_order(2) == 3);
    CHECK(z6.element_order(1) == 6);

    const FiniteGroup z12 = make_cyclic(12);
    const std::vector<std::size_t> want{1, 12, 6, 4, 3, 12, 2, 12, 3, 4, 6, 12};
    CHECK(z12.element_orders() == want);

    CHECK_THROWS_AS(make_cyclic(0), InvalidArgument);
  }

  TEST_CASE("sum of totients over divisors") {
    for (std::uint64_t n : {1, 6, 12, 30, 64, 97, 360}) {
      std::uint64_t s = 0;
      for (auto d : divisors(n)) s += euler_phi(d);
      CHECK(s == n);
      std::size_t total = 0;
      for (auto [k, count] : make_cyclic(n).order_census()) {
        CHECK(count == euler_phi(k));
        total += count;
      }
      CHECK(total == n);
    }
  }

  TEST_CASE("direct products") {
    const FiniteGroup klein = direct_product(make_cyclic(2), make_cyclic(2));
    CHECK(klein.order_census() == Census{{1, 1}, {2, 3}});
    CHECK(direct_product(make_cyclic(2), make_cyclic(4)).order_census() == Census{{1, 1}, {2, 3}, {4, 4}});
    CHECK(direct_product(make_cyclic(3), make_cyclic(9)).order_census() == Census{{1, 1}, {3, 8}, {9, 18}});
    CHECK(direct_product(make_cyclic(2), make_cyclic(4)).label(5) == "(1,1)");
  }

  TEST_CASE("semidirect products") {
    const FiniteGroup z5 = make_cyclic(5), z2 = make_cyclic(2), z7 = make_cyclic(7), z3 = make_cyclic(3);
    const std::uint64_t o5[] = {5}, m4[] = {4}, o7[] = {7}, m2[] = {2}, m1[] = {1};

    const FiniteGroup d10 = semidirect_product(z5, z2, cyclic_exponent_action(o5, 2, m4));
    CHECK(d10.order() == 10);
    CHECK(d10.order_census().at(2) == 5);

    const FiniteGroup f21 = semidirect_product(z7, z3, cyclic_exponent_action(o7, 3, m2));
    CHECK(f21.order() == 21);
    CHECK_FALSE(commutes_everywhere(f21));

    const FiniteGroup trivial = semidirect_product(z5, z2, cyclic_exponent_action(o5, 2, m1));
    CHECK(trivial.order_census() == direct_product(z5, z2).order_census());
    CHECK(trivial.is_abelian());

    // 2 has order 3 mod 7, not 2, so h -> (x -> 2x) is not a homomorphism from Z_2
    CHECK_THROWS_AS(semidirect_product(z7, z2, cyclic_exponent_action(o7, 2, m2)), InvalidArgument);
    // x -> 0 is not an automorphism
    GroupAction bad(2, std::vector<Element>(5, 0));
    CHECK_THROWS_AS(semidirect_product(z5, z2, bad), InvalidArgument);
  }

  TEST_CASE("dihedral groups") {
    CHECK(make_dihedral(2).order_census() == Census{{1, 1}, {2, 3}});
    CHECK(make_dihedral(3).order_census() == Census{{1, 1}, {2, 3}, {3, 2}});
    CHECK(make_dihedral(5).order_census() == Census{{1, 1}, {2, 5}, {5, 4}});
    CHECK_THROWS_AS(make_dihedral(1), InvalidArgument);
  }

  TEST_CASE("dicyclic groups") {
    const FiniteGroup q8 = make_dicyclic(2);
    CHECK(q8.order() == 8);
    CHECK(q8.order_census().at(2) == 1);
    CHECK(q8.center() == std::vector<Element>{0, 2});
    CHECK_FALSE(q8.is_abelian());

    const FiniteGroup q12 = make_dicyclic(3);
    CHECK(q12.order() == 12);
    for (Element i = 0; i < 6; ++i) CHECK(q12.element_order(6 + i) == 4);
    CHECK_THROWS_AS(make_dicyclic(1), InvalidArgument);
  }

  TEST_CASE("Frobenius groups") {
    CHECK(make_frobenius(5, 2).order_census() == make_dihedral(5).order_census());
    CHECK(make_frobenius(3, 2).order_census() == make_dihedral(3).order_census());
    const FiniteGroup f21 = make_frobenius(7, 3);
    CHECK(f21.order() == 21);
    CHECK_FALSE(f21.is_abelian());
    CHECK(multiplicative_order(2, 7) == 3);
    CHECK(make_frobenius(7, 3, 4).order_census() == f21.order_census());
    CHECK_THROWS_AS(make_frobenius(7, 5), InvalidArgument);
    CHECK_THROWS_AS(make_frobenius(7, 3, 6), InvalidArgument);
  }

  TEST_CASE("groups of order pqr") {
    CHECK(multiplicative_order(3, 7) == 6);
    CHECK(multiplicative_order(2, 11) == 10);
    const FiniteGroup f42 = make_f_p_qr(7, 3, 2);
    CHECK(f42.order() == 42);
    CHECK(f42.order_census() == Census{{1, 1}, {2, 7}, {3, 14}, {6, 14}, {7, 6}});
    CHECK(make_f_p_qr(11, 5, 2).order() == 110);
    CHECK_THROWS_AS(make_f_p_qr(11, 3, 2), InvalidArgument);

    const FiniteGroup g30 = make_g_i5(5, 3, 2, 1, 2, 4);
    CHECK(g30.order() == 30);
    CHECK_FALSE(g30.is_abelian());
    CHECK(g30.order_census() == make_g_i5(5, 3, 2, 1).order_census());
    CHECK_THROWS_AS(make_g_i5(5, 3, 2, 2), InvalidArgument);
    CHECK_THROWS_AS(make_g_i5(7, 3, 2, 1, 1), InvalidArgument);
  }

  TEST_CASE("p-groups of order p^3") {
    CHECK(make_zp_zp2(2).order_census() == Census{{1, 1}, {2, 3}, {4, 4}});
    CHECK(make_zp_zp2(3).order_census() == Census{{1, 1}, {3, 8}, {9, 18}});
    CHECK(make_elementary_abelian_p3(2).order_census() == Census{{1, 1}, {2, 7}});
    CHECK(make_elementary_abelian_p3(3).order_census() == Census{{1, 1}, {3, 26}});
    const FiniteGroup m = make_zp2_semidirect_zp(2);
    CHECK(m.order() == 8);
    CHECK_FALSE(m.is_abelian());
    CHECK(m.order_census() == Census{{1, 1}, {2, 5}, {4, 2}});  // p = 2 gives D_4
    CHECK(make_zp2_semidirect_zp(3).order() == 27);
  }

  TEST_CASE("axioms hold for every constructor") {
    const std::vector<FiniteGroup> groups{make_cyclic(12),          make_dihedral(6),
                                          make_dicyclic(4),         make_frobenius(7, 3),
                                          make_f_p_qr(7, 3, 2),     make_g_i5(5, 3, 2, 1),
                                          make_zp_zp2(3),           make_elementary_abelian_p3(3),
                                          make_zp2_semidirect_zp(3), direct_product(make_cyclic(2), make_frobenius(7, 3)),
                                          make_f_p_qr(11, 5, 2)};
    for (const auto& g : groups) CHECK(satisfies_group_axioms(g));
  }

  TEST_CASE("non-associative table is caught") {
    // Latin square with identity 0 that is not associative (order 5 loop).
    const std::vector<Element> t{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
    const FiniteGroup loop(5, t, 0);
    CHECK_FALSE(satisfies_group_axioms(loop));
  }

  TEST_CASE("group spec grammar") {
    CHECK(GroupSpec::parse("cyclic:2 x frobenius:7,3").build().order() == 42);
    CHECK(GroupSpec::parse("cyclic:2 x frobenius:7,3").to_string() == "cyclic:2 x frobenius:7,3");
    CHECK(GroupSpec::parse("gi5:5,3,2").order() == 30);
    CHECK(GroupSpec::parse("zpsdzp2:2").build().order() == 8);
    for (const char* bad : {"", "cyclic", "cyclic:x", "nope:3", "cyclic:2 x", "dihedral:3,4", "fpqr:7,3"})
      CHECK_THROWS_AS(GroupSpec::parse(bad).build(), InvalidArgument);
  }
}
