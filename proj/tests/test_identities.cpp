#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "isomf/catalog.hpp"
#include "isomf/identities.hpp"

using namespace isomf;

TEST_CASE("quadratic product-index splitting, specific instances") {
  // Fibonacci: F_8 = F_4 F_4 + t_2 F_3 F_3, i.e. 34 = 5*5 + 3*3
  CHECK(check_br_product(Scalar(1L), Scalar(1L), 4, 4).pass);
  CHECK(check_br_product(Scalar(2L), Scalar(-1L), 3, 5).pass);
  CHECK(check_br_product(scalar_parse("p+1"), scalar_parse("-p"), 2, 6).pass);
  CHECK(check_br_inverse(Scalar(1L), Scalar(1L), 4, 4).pass);
  CHECK(check_br_inverse(scalar_parse("p+1"), scalar_parse("-p"), 3, 3).pass);
}

TEST_CASE("quadratic splitting sweep") {
  auto rep = sweep_br();
  INFO(rep.witness);
  CHECK(rep.pass);
}

TEST_CASE("hook splitting, specific instances") {
  CHECK(check_thm13(CoreParams::from_ints({1, 1}), 3, 4).pass);
  CHECK(check_thm13(CoreParams::from_ints({-2, -2, -2}), 2, 2).pass);
  CHECK(check_thm13(CoreParams::from_ints({1, -1, 2, 1}), 4, 7).pass);
  // r = 0 reduces to F_s = F_s
  CHECK(check_thm13(CoreParams::from_ints({1, 2, 3}), 0, 5).pass);
}

TEST_CASE("hook splitting sweep") {
  auto rep = sweep_thm13();
  INFO(rep.witness);
  CHECK(rep.pass);
}

TEST_CASE("parameters as signed values, symbolically") {
  auto rep = sweep_prop5(6);
  INFO(rep.witness);
  CHECK(rep.pass);
  CHECK(params_from_F(4).pass);
}

TEST_CASE("degree-2 closed form") {
  CHECK(check_binomial(Scalar(1L), Scalar(1L), 8).pass);
  CHECK(check_binomial(scalar_parse("p+1"), scalar_parse("-p"), 5).pass);
  auto rep = sweep_binomial();
  INFO(rep.witness);
  CHECK(rep.pass);
}

TEST_CASE("valence <1,1> formulas") {
  CHECK(check_totient_formulas(Scalar(3L), Scalar(1L), 8).pass);
  CHECK(check_totient_formulas(Scalar(2L), Scalar(3L), 8).pass);
  CHECK(check_totient_formulas(Scalar(5L), Scalar(1L), 8).pass);
  CHECK_THROWS_AS(check_totient_formulas(Scalar(2L), Scalar(2L), 8), Error);
  CHECK_THROWS_AS(check_totient_formulas(Scalar(0L), Scalar(2L), 8), Error);
  auto rep = sweep_totient();
  INFO(rep.witness);
  CHECK(rep.pass);
}

TEST_CASE("quadratic-recursion report for tau") {
  LocalMF tau = from_params(CoreParams::from_ints({2, -1}), 12);
  McCarthyReport rep = check_mccarthy(tau);
  CHECK(rep.recursion.pass);
  // B_n = F_n^2 - F_{2n} = (n+1)^2 - (2n+1) = n^2 gives u = (1, 3, ...):
  // not completely multiplicative, so the degree-1 side fails.
  CHECK_FALSE(rep.b_degree_one.pass);
  REQUIRE(rep.b_params.size() >= 2);
  CHECK(rep.b_params[0] == Scalar(1L));
  CHECK(rep.b_params[1] == Scalar(3L));
}

TEST_CASE("quadratic recursion holds even when F_2 vanishes") {
  // t = (1, -1): F = 1, 1, 0, -1, -1, 0, ... so B_1 = F_1^2 - F_2 = 1
  LocalMF f = from_params(CoreParams::from_ints({1, -1}), 12);
  McCarthyReport rep = check_mccarthy(f);
  CHECK(rep.recursion.pass);
}

TEST_CASE("quadratic recursion for a degree-1 B") {
  // completely multiplicative f (degree 1) has degree exactly 1, not 2
  LocalMF zeta = from_params(CoreParams::from_ints({1}), 12);
  CHECK_THROWS_AS(check_mccarthy(zeta), Error);
  LocalMF phi = from_params(
      CoreParams(std::vector<Scalar>(12, Scalar(1L)), CoreParams::Kind::Truncated), 12);
  CHECK_THROWS_AS(check_mccarthy(phi), Error);
}

TEST_CASE("product-parameter formula instances") {
  CHECK(check_cor9(CoreParams::from_ints({1, 1}), CoreParams::from_ints({2, -1}), 10).pass);
  CHECK(check_cor9(CoreParams::from_ints({3}), CoreParams::from_ints({1, -1, 2}), 10).pass);
}

TEST_CASE("degree-1-times-inverse expansion instances") {
  CHECK(check_thm11(Scalar(2L), CoreParams::from_ints({1, 1}), 10).pass);
  CHECK(check_thm11(scalar_parse("p"), CoreParams({scalar_parse("p-1"), scalar_parse("p")}), 8).pass);
}

TEST_CASE("reports serialize") {
  auto rep = check_br_product(Scalar(1L), Scalar(1L), 2, 2);
  auto j = rep.to_json();
  CHECK(j["pass"] == true);
  CHECK(j.contains("identity"));
  CheckReport bad;
  bad.identity = "x";
  bad.fail("first");
  bad.fail("second");
  CHECK(bad.witness == "first");
  CHECK(bad.to_json()["pass"] == false);
}
