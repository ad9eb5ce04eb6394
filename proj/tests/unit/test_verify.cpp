#include <doctest.h>

#include "powerspec/charpoly.hpp"
#include "powerspec/error.hpp"
#include "powerspec/powergraph.hpp"
#include "powerspec/scan.hpp"
#include "powerspec/section4.hpp"
#include "powerspec/spectral.hpp"
#include "powerspec/verify.hpp"

using namespace powerspec;

TEST_SUITE("verify") {
  TEST_CASE("vertex connectivity") {
    CHECK(vertex_connectivity(complete_graph(4)) == 3);
    CHECK(vertex_connectivity(star_graph(5)) == 1);
    CHECK(vertex_connectivity(cycle_graph(6)) == 2);
    CHECK(vertex_connectivity(path_graph(4)) == 1);
    CHECK(vertex_connectivity(complete_graph(1)) == 0);
    CHECK(vertex_connectivity(power_graph(make_cyclic(6))) == 3);
    CHECK(vertex_connectivity(power_graph(make_dihedral(5))) == 1);
    CHECK(vertex_connectivity(power_graph(GroupSpec::parse("cyclic:2 x frobenius:7,3").build())) == 2);
    CHECK(local_vertex_connectivity(cycle_graph(6), 0, 3) == 2);
    CHECK_THROWS_AS(vertex_connectivity(empty_graph(3)), DisconnectedGraph);
  }

  TEST_CASE("exact theorems") {
    for (const auto& [id, params] : std::vector<std::pair<TheoremId, Params>>{
             {TheoremId::DL_Z2sdZ4, {}},
             {TheoremId::DL_ZpZp2, {{"p", 2}}},
             {TheoremId::L_ZpZp2, {{"p", 3}}},
             {TheoremId::DL_ElemAb, {{"p", 2}}},
             {TheoremId::L_ElemAb, {{"p", 3}}},
             {TheoremId::DL_ProperDicyclic, {{"n", 2}}},
             {TheoremId::L_ProperDicyclic, {{"n", 4}}},
             {TheoremId::DL_ProperCyclic, {{"n", 10}}},
         }) {
      CAPTURE(to_string(id));
      const VerificationReport r = verify_theorem(id, params);
      CHECK(r.equal);
      CHECK(r.confirmed());
      CHECK(r.degree_gap == 0);
      CHECK(r.all_factors_divide());
    }
  }

  TEST_CASE("flagged theorems") {
    const VerificationReport q3 = verify_theorem(TheoremId::DL_ProperDicyclic, {{"n", 3}});
    CHECK_FALSE(q3.equal);
    CHECK(q3.oracle_degree == 11);

    const VerificationReport zr = verify_theorem(TheoremId::L_ZrFpq, {{"r", 2}, {"p", 7}, {"q", 3}});
    CHECK_FALSE(zr.equal);
    CHECK(zr.alternative_equal == std::optional<bool>(true));
    CHECK(zr.confirmed());
    CHECK(zr.all_factors_divide());
    CHECK(zr.degree_gap == 42 - static_cast<long long>(zr.stated_degree));
    CHECK(zr.degree_gap > 0);
  }

  TEST_CASE("oracle spectrum of F_{7,6}") {
    const IntPolynomial dl = oracle_charpoly(GroupSpec::parse("fpqr:7,3,2"), MatrixKind::DistanceLaplacian, false);
    CHECK(dl.degree() == 42);
    CHECK(multiplicity_of(dl, IntPolynomial::linear(78)) == 14);
    CHECK(multiplicity_of(dl, IntPolynomial::linear(77)) == 5);
    CHECK(multiplicity_of(dl, IntPolynomial::linear(70)) == 0);
  }

  TEST_CASE("structural displays") {
    CHECK(verify_structure(StructuralFamily::Z2SdZ4, {}).equal());
    CHECK(verify_structure(StructuralFamily::ZpZp2, {3}).equal());
    CHECK(verify_structure(StructuralFamily::ElemAbelianP3, {2}).equal());
    CHECK(verify_structure(StructuralFamily::ZrFpq, {2, 7, 3}).equal());
    CHECK(verify_structure(StructuralFamily::Gi5, {5, 3, 2}).equal());
    CHECK(verify_structure(StructuralFamily::ProperCyclic, {12}).equal());
    CHECK(verify_structure(StructuralFamily::ProperDicyclic, {4}).equal());
    CHECK_FALSE(verify_structure(StructuralFamily::ProperDicyclic, {3}).equal());
    const StructureReport ii = verify_structure(StructuralFamily::FpqrCaseII, {11, 5, 2});
    CHECK_FALSE(ii.equal());
    CHECK(ii.structural_order == 1 + 11 * 9);
    CHECK(ii.group_order == 110);
  }

  TEST_CASE("corpus lemmas") {
    const auto corpus = verification_corpus();
    CHECK(corpus.size() >= 20);
    std::size_t diameter_two = 0;
    for (const CorpusGraph& c : corpus) {
      CAPTURE(c.name);
      CHECK(is_connected(c.graph));
      CHECK(check_twin_lemmas(c.graph).ok());
      if (diameter(c.graph) <= 2) {
        CHECK(check_diameter2(c.graph).ok);
        ++diameter_two;
      } else {
        CHECK_FALSE(c.power_graph);
        CHECK_THROWS_AS(check_diameter2(c.graph), InvalidArgument);
      }
    }
    CHECK(diameter_two >= 20);
  }

  TEST_CASE("twin report counts") {
    const TwinReport star = check_twin_lemmas(star_graph(4));
    CHECK(star.independent_classes == 1);
    CHECK(star.clique_classes == 0);
    CHECK(star.predicted.listed_multiplicity(IntPolynomial::linear(9)) == 3);
  }

  TEST_CASE("integrality scan") {
    CHECK(classify(16) == Classification::PrimePower);
    CHECK(classify(15) == Classification::TwoDistinctPrimes);
    CHECK(classify(12) == Classification::Other);
    CHECK(classify(2) == Classification::PrimePower);
    CHECK(to_string(Classification::TwoDistinctPrimes) == "two-primes");

    const auto rows = scan_integrality(40, 1);
    REQUIRE(rows.size() == 39);
    CHECK(rows.front().n == 2);
    for (const auto& row : rows) {
      CAPTURE(row.n);
      CHECK_FALSE(row.laplacian_violation);
      CHECK_FALSE(row.distance_violation);
      if (row.classification == Classification::PrimePower) CHECK(row.distance_laplacian_integral);
      if (!row.laplacian_integral) CHECK_FALSE(row.laplacian_residual.empty());
    }
    const ConjectureRow r6 = scan_row(6);
    CHECK(r6.laplacian_integral);
    CHECK(r6.distance_laplacian_integral);

    const auto threaded = scan_integrality(25, 3);
    for (std::size_t i = 0; i < threaded.size(); ++i) {
      CHECK(threaded[i].n == rows[i].n);
      CHECK(threaded[i].distance_laplacian_integral == rows[i].distance_laplacian_integral);
    }
  }

  TEST_CASE("inequality checks") {
    CHECK(check_cyclic_upper_bound(12).ok);
    CHECK(check_cyclic_upper_bound(7).ok);
    CHECK(check_dominance(GroupSpec::parse("dihedral:4"), GroupSpec::parse("cyclic:8")).ok);
    CHECK(check_dominance(GroupSpec::parse("dicyclic:2"), GroupSpec::parse("cyclic:8")).ok);
    CHECK(check_section4_inequalities(GroupSpec::parse("cyclic:12")).ok());
    CHECK(check_section4_inequalities(GroupSpec::parse("dihedral:6")).ok());
    CHECK(check_section4_inequalities(GroupSpec::parse("cyclic:2 x frobenius:7,3")).ok());
    CHECK(check_graph_bounds("K5", complete_graph(5), true).ok());
    CHECK(check_graph_bounds("C6", cycle_graph(6), false).ok());
  }

  TEST_CASE("G_{i+5} does not depend on i") {
    const Graph g1 = power_graph(make_g_i5(13, 7, 3, 1));
    const Graph g2 = power_graph(make_g_i5(13, 7, 3, 2));
    CHECK(g1.order() == 273);
    CHECK(g1.degree_sequence() == g2.degree_sequence());
    CHECK(charpoly(laplacian_matrix(g1)) == charpoly(laplacian_matrix(g2)));
    CHECK(charpoly(distance_laplacian_matrix(g1)) == charpoly(distance_laplacian_matrix(g2)));
  }
}
