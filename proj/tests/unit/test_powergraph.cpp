#include <doctest.h>

#include "powerspec/charpoly.hpp"
#include "powerspec/error.hpp"
#include "powerspec/numtheory.hpp"
#include "powerspec/powergraph.hpp"
#include "powerspec/spectral.hpp"

using namespace powerspec;

namespace {

using Degrees = std::vector<std::size_t>;

bool same_edges(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  for (std::size_t u = 0; u < a.order(); ++u)
    for (std::size_t v = 0; v < a.order(); ++v)
      if (u != v && a.adjacent(u, v) != b.adjacent(u, v)) return false;
  return true;
}

std::size_t universal_vertices(const Graph& g) {
  std::size_t k = 0;
  for (std::size_t v = 0; v < g.order(); ++v) k += g.degree(v) == g.order() - 1;
  return k;
}

}  // namespace

TEST_SUITE("powergraph") {
  TEST_CASE("graph basics") {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 0);
    CHECK(g.edge_count() == 1);
    CHECK_THROWS_AS(g.add_edge(2, 2), InvalidArgument);
    CHECK_FALSE(is_connected(g));
    CHECK_FALSE(is_connected(empty_graph(2)));
    CHECK_THROWS_AS(diameter(empty_graph(2)), DisconnectedGraph);
    CHECK(diameter(star_graph(4)) == 2);
    CHECK(diameter(complete_graph(5)) == 1);
    CHECK(distance_all_pairs(path_graph(3))[0][2] == 2);
    CHECK(diameter(cycle_graph(7)) == 3);
    CHECK(complement(complete_graph(4)).edge_count() == 0);
  }

  TEST_CASE("power graphs of cyclic groups") {
    CHECK(same_edges(power_graph(make_cyclic(7)), complete_graph(7)));
    const Graph z6 = power_graph(make_cyclic(6));
    CHECK(z6.degree_sequence() == Degrees{5, 5, 5, 4, 4, 3});
    CHECK(z6.adjacent(2, 4));
    CHECK(z6.degree(3) == 3);
    CHECK(diameter(z6) == 2);
    CHECK(same_edges(power_graph(make_elementary_abelian_p3(2)), star_graph(7)));
  }

  TEST_CASE("universal vertices of P(Z_n)") {
    for (std::uint64_t n = 2; n <= 40; ++n) {
      const Graph g = power_graph(make_cyclic(n));
      if (is_prime_power(n))
        CHECK(universal_vertices(g) == n);
      else
        CHECK(universal_vertices(g) == euler_phi(n) + 1);
    }
  }

  TEST_CASE("proper power graphs") {
    CHECK(same_edges(proper_power_graph(make_cyclic(4)), complete_graph(3)));
    const Graph z6 = proper_power_graph(make_cyclic(6));
    CHECK(z6.order() == 5);
    CHECK(z6.degree_sequence() == Degrees{4, 4, 3, 3, 2});
    const Graph q8 = proper_power_graph(make_dicyclic(2));
    CHECK(q8.degree_sequence() == Degrees{6, 2, 2, 2, 2, 2, 2});
    for (std::size_t k : {2, 4, 8}) {
      const Graph q = proper_power_graph(make_dicyclic(k));
      CHECK(is_connected(q));
      CHECK(universal_vertices(q) == 1);
    }
    CHECK_FALSE(is_connected(proper_power_graph(make_dihedral(3))));
    CHECK(is_connected(proper_power_graph(make_cyclic(12))));
  }

  TEST_CASE("joined union") {
    const Graph k2 = joined_union(complete_graph(2), {complete_graph(1), complete_graph(1)});
    CHECK(same_edges(k2, complete_graph(2)));
    const Graph disjoint = joined_union(empty_graph(2), {complete_graph(2), complete_graph(3)});
    CHECK(disjoint.edge_count() == 4);
    CHECK_FALSE(is_connected(disjoint));

    const Graph eq2 = joined_union(star_graph(2), {complete_graph(1), complete_graph(3), empty_graph(4)});
    Graph direct(8);
    for (std::size_t v = 1; v < 8; ++v) direct.add_edge(0, v);
    direct.add_edge(1, 2), direct.add_edge(1, 3), direct.add_edge(2, 3);
    CHECK(same_edges(eq2, direct));
    CHECK(eq2.class_label(4) == "P2");
    CHECK(diameter(eq2) == 2);

    CHECK_THROWS_AS(joined_union(complete_graph(3), {complete_graph(1)}), InvalidArgument);
  }

  TEST_CASE("divisor graph") {
    const DivisorGraph d12 = divisor_graph(12);
    CHECK(d12.divisors == std::vector<std::uint64_t>{2, 3, 4, 6});
    CHECK(d12.graph.edge_count() == 3);
    CHECK(d12.graph.adjacent(0, 2));
    CHECK(d12.graph.adjacent(0, 3));
    CHECK(d12.graph.adjacent(1, 3));
    CHECK(d12.totients == std::vector<std::uint64_t>{1, 2, 2, 2});

    const DivisorGraph d6 = divisor_graph(6);
    CHECK(d6.graph.order() == 2);
    CHECK(d6.graph.edge_count() == 0);
    CHECK(divisor_graph(49).divisors == std::vector<std::uint64_t>{7});
    CHECK(divisor_graph(13).graph.order() == 0);

    for (std::uint64_t n : {12, 30, 36, 72, 210}) {
      std::uint64_t expect = 1;
      for (auto [p, a] : factorize(n)) expect *= a + 1;
      CHECK(divisor_graph(n).graph.order() == expect - 2);
    }
  }

  TEST_CASE("structural displays") {
    const Graph q2 = structural_power_graph(StructuralFamily::ProperDicyclic, {2});
    CHECK(q2.order() == 7);
    CHECK(q2.degree_sequence() == Degrees{6, 2, 2, 2, 2, 2, 2});

    const Graph pz6 = structural_power_graph(StructuralFamily::ProperCyclic, {6});
    CHECK(pz6.degree_sequence() == proper_power_graph(make_cyclic(6)).degree_sequence());

    const Graph z2z4 = structural_power_graph(StructuralFamily::ZpZp2, {2});
    const Graph built = power_graph(make_zp_zp2(2));
    CHECK(z2z4.order() == 8);
    CHECK(charpoly(distance_laplacian_matrix(z2z4)) == charpoly(distance_laplacian_matrix(built)));

    const Graph eq2 = structural_power_graph(StructuralFamily::Z2SdZ4, {});
    CHECK(eq2.degree_sequence() == Degrees{7, 3, 3, 3, 1, 1, 1, 1});

    for (auto [family, params] : std::vector<std::pair<StructuralFamily, std::vector<std::uint64_t>>>{
             {StructuralFamily::ZpZp2, {3}},
             {StructuralFamily::ElemAbelianP3, {3}},
             {StructuralFamily::ZrFpq, {2, 7, 3}},
             {StructuralFamily::FpqrCaseI, {7, 3, 2}},
             {StructuralFamily::Gi5, {5, 3, 2}},
             {StructuralFamily::ProperCyclic, {12}},
             {StructuralFamily::ProperDicyclic, {4}}}) {
      const GroupSpec spec = structural_group(family, params);
      const std::size_t order = spec.order() - (structural_is_proper(family) ? 1 : 0);
      CHECK(structural_power_graph(family, params).order() == order);
    }
    // case (ii) display is one vertex class short
    CHECK(structural_power_graph(StructuralFamily::FpqrCaseII, {11, 5, 2}).order() == 1 + 11 * 9);

    CHECK_THROWS_AS(structural_power_graph(StructuralFamily::ZrFpq, {2, 7, 5}), InvalidArgument);
  }

  TEST_CASE("named graphs") {
    CHECK(named_graph("complete:4").edge_count() == 6);
    CHECK(named_graph("star:3").order() == 4);
    CHECK(named_graph("divisor:12").order() == 4);
    CHECK(named_graph("structural:ZrFpq:2,7,3").order() == 42);
    CHECK_THROWS_AS(named_graph("complete"), InvalidArgument);
    CHECK_THROWS_AS(named_graph("wheel:5"), InvalidArgument);
  }
}
