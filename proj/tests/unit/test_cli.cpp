#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "powerspec/cli.hpp"
#include "powerspec/closedforms.hpp"
#include "powerspec/export.hpp"
#include "powerspec/powergraph.hpp"

using namespace powerspec;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("help and usage errors") {
    CHECK(run({"--help"}).code == kExitOk);
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"nonsense"}).code == kExitUsage);

    const Run bad_prime = run({"closed-form", "DL-ZpZp2", "--params", "p=4"});
    CHECK(bad_prime.code == kExitUsage);
    CHECK(contains(bad_prime.err, "--params"));

    const Run bad_group = run({"spectrum", "--group", "cyclic:x"});
    CHECK(bad_group.code == kExitUsage);
    CHECK(contains(bad_group.err, "--group"));

    CHECK(run({"scan", "--max-n", "abc"}).code == kExitUsage);
    CHECK(run({"scan", "--max-n", "1"}).code == kExitUsage);
    CHECK(run({"charpoly", "--graph", "path:3", "--matrix", "Q"}).code == kExitUsage);
    CHECK(run({"closed-form", "Nope"}).code == kExitUsage);
    CHECK(run({"spectrum"}).code == kExitUsage);
    CHECK(run({"charpoly", "--graph", "empty:3"}).code == kExitUsage);
  }

  TEST_CASE("charpoly and spectrum") {
    const Run cp = run({"charpoly", "--graph", "path:3", "--matrix", "DL"});
    CHECK(cp.code == kExitOk);
    CHECK(cp.out == "x^3 - 8*x^2 + 15*x\n");
    CHECK(run({"charpoly", "--graph", "path:3", "--matrix", "A"}).out == "x^3 - 2*x\n");
    CHECK(run({"charpoly", "--graph", "path:3", "--format", "latex"}).out == "x^{3}-8x^{2}+15x\n");

    const Run sp = run({"spectrum", "--group", "cyclic:4"});
    CHECK(sp.out == "root 0 multiplicity 1\nroot 4 multiplicity 3\n");

    const Run eq2 = run({"spectrum", "--group", "zpsdzp2:2", "--format", "latex"});
    CHECK(eq2.out == "x(x-8)(x-12)^{2}(x-15)^{4}\n");

    const Run csv = run({"spectrum", "--structure", "Z2sdZ4", "--format", "csv"});
    CHECK(csv.out == "factor,multiplicity\n0,1\n8,1\n12,2\n15,4\n");

    const Run numeric = run({"spectrum", "--graph", "path:4", "--matrix", "A", "--numeric"});
    CHECK(numeric.code == kExitOk);
    CHECK(contains(numeric.out, "1.618033988"));

    const Run js = run({"spectrum", "--group", "dicyclic:2", "--proper", "--format", "json"});
    const Json j = Json::parse(js.out);
    CHECK(factorization_from_json(j).latex() == "x(x-7)(x-11)^{3}(x-13)^{2}");
  }

  TEST_CASE("closed forms") {
    CHECK(run({"closed-form", "DL-Z2sdZ4", "--format", "latex"}).out == "x(x-8)(x-12)^{2}(x-15)^{4}\n");
    const Run js = run({"closed-form", "DL-ZpZp2", "--params", "p=2"});
    CHECK(js.code == kExitOk);
    const Json j = Json::parse(js.out);
    CHECK(j["degree"] == 8);
    CHECK(j["theorem"] == "DL-ZpZp2");
    CHECK(run({"closed-form", "DL-ZpZp2", "--params", "p=2"}).out == js.out);
  }

  TEST_CASE("verify exit codes") {
    CHECK(run({"verify", "DL-Z2sdZ4"}).code == kExitOk);
    CHECK(run({"verify", "DL-ProperDicyclic", "--params", "n=3"}).code == kExitDiscrepancy);
    CHECK(run({"verify", "L-ZrFpq", "--params", "r=2,p=7,q=3"}).code == kExitOk);
    CHECK(run({"verify", "--structure", "ZpZp2:2"}).code == kExitOk);
    CHECK(run({"verify", "--structure", "Fpqr-ii:11,5,2"}).code == kExitDiscrepancy);
    const Run g = run({"verify", "--graph", "star:3"});
    CHECK(g.code == kExitOk);
    CHECK(contains(g.err, "runtime_seconds"));
    CHECK_FALSE(contains(g.out, "runtime"));
    CHECK(run({"verify", "--section4", "--group", "cyclic:12"}).code == kExitOk);
  }

  TEST_CASE("scan output") {
    const Run csv = run({"scan", "--max-n", "12", "--format", "csv"});
    CHECK(csv.code == kExitOk);
    CHECK(contains(csv.out, "\n12,other,"));
    const Run js = run({"scan", "--max-n", "12"});
    const Json j = Json::parse(js.out);
    CHECK(j["violations"] == 0);
  }

  TEST_CASE("build and export") {
    const Run dot = run({"build", "--graph", "divisor:12", "--format", "dot"});
    CHECK(dot.code == kExitOk);
    CHECK(contains(dot.out, "graph"));
    const Json g = Json::parse(run({"build", "--group", "cyclic:6"}).out);
    CHECK(g["order"] == 6);
    CHECK(g["edges"] == 13);

    CHECK(run({"export", "--group", "cyclic:6"}).code == kExitUsage);
    CHECK(run({"export", "DL-ElemAb", "--params", "p=2", "--format", "csv"}).out ==
          "factor,multiplicity\n0,1\n8,1\n15,6\n");

    const std::string path = "cli_test_out.json";
    CHECK(run({"export", "--group", "cyclic:6", "--format", "json", "--out", path}).code == kExitOk);
    std::ifstream in(path);
    REQUIRE(in);
    CHECK(Json::parse(in)["order"] == 6);
    std::remove(path.c_str());
  }

  TEST_CASE("json round trips") {
    const SpectrumFactorization f = evaluate_theorem(TheoremId::L_ZrFpq, {{"r", 2}, {"p", 7}, {"q", 3}}).factorization;
    CHECK(factorization_from_json(factorization_to_json(f)).same_multiset(f));
    const IntPolynomial big{-1, 0, 3};
    CHECK(polynomial_from_json(polynomial_to_json(big)) == big);
    IntPolynomial huge = IntPolynomial::linear(mpz_class("1000000000000000000000007"));
    CHECK(polynomial_from_json(Json::parse(dump(polynomial_to_json(huge)))) == huge);
    CHECK_THROWS(polynomial_from_json(Json::parse(R"({"coeffs": ["x"]})")));
  }
}
