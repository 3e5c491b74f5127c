#include <catch2/catch_amalgamated.hpp>

#include "wordsym/algebraic.hpp"

using namespace wordsym;

TEST_CASE("rational normalization and order") {
  REQUIRE(Rational(4, 2) == Rational(2));
  REQUIRE(Rational(-3, -6) == Rational(1, 2));
  REQUIRE(Rational(1, -2).num == -1);
  REQUIRE(Rational(7, 3) < Rational(12, 5));
  REQUIRE(Rational(9, 4) <= Rational(9, 4));
  REQUIRE_THROWS_AS(Rational(1, 0), contract_error);
}

TEST_CASE("rational threshold") {
  Threshold two = threshold_tm();
  REQUIRE(two.admits(Rational(2)));
  REQUIRE(two.admits(Rational(39, 20)));
  REQUIRE_FALSE(two.admits(Rational(201, 100)));
}

TEST_CASE("sqrt2 threshold is decided exactly") {
  Threshold t = threshold_binary_rich();  // 2 + sqrt(2)/2 = 2.70710678...
  REQUIRE(t.admits(Rational(27, 10)));
  REQUIRE(t.admits(Rational(27071067, 10000000)));
  REQUIRE_FALSE(t.admits(Rational(27071068, 10000000)));
  REQUIRE_FALSE(t.admits(Rational(271, 100)));
  REQUIRE(t.admits(Rational(1)));  // below the rational part entirely

  // negative radical coefficient: 3 - sqrt(2) = 1.5857...
  Threshold neg = Threshold::sqrt2_form(Rational(3), Rational(-1));
  REQUIRE(neg.admits(Rational(158, 100)));
  REQUIRE_FALSE(neg.admits(Rational(159, 100)));
}

TEST_CASE("ternary threshold is decided exactly") {
  Threshold t = threshold_ternary_rich();  // 1 + 1/(3-mu) = 2.258763245...
  REQUIRE(t.admits(Rational(9, 4)));
  REQUIRE(t.admits(Rational(467, 207)));
  REQUIRE(t.admits(Rational(225876324, 100000000)));
  REQUIRE_FALSE(t.admits(Rational(225876325, 100000000)));
  REQUIRE_FALSE(t.admits(Rational(226, 100)));
  REQUIRE(t.admits(Rational(1, 2)));
  REQUIRE(t.admits(Rational(2)));
}

TEST_CASE("mu enclosure is certified by a sign change") {
  auto mu = mu_interval();
  REQUIRE(Rational(220, 100) < mu.first);
  REQUIRE(mu.second < Rational(221, 100));
  REQUIRE(mu_poly_sign(BigInt(mu.first.num), BigInt(mu.first.den)) == Sign::negative);
  REQUIRE(mu_poly_sign(BigInt(mu.second.num), BigInt(mu.second.den)) == Sign::positive);
  // width <= 2^-48
  double width = mu.second.approx() - mu.first.approx();
  REQUIRE(width <= 1e-12);
}

TEST_CASE("threshold intervals enclose the decimal expansions") {
  auto ternary = threshold_ternary_rich().interval();
  REQUIRE(ternary.first.approx() <= 2.25876325);
  REQUIRE(ternary.second.approx() >= 2.25876324);
  REQUIRE(ternary.second.approx() - ternary.first.approx() <= 1e-12);

  auto binary = threshold_binary_rich().interval();
  REQUIRE(binary.first.approx() <= 2.70710679);
  REQUIRE(binary.second.approx() >= 2.70710678);

  auto flat = threshold_tm().interval();
  REQUIRE(flat.first == flat.second);
  REQUIRE(flat.first == Rational(2));
}

TEST_CASE("threshold lookup by name") {
  REQUIRE(threshold_by_name("tm").admits(Rational(2)));
  REQUIRE(threshold_by_name("7/3").admits(Rational(7, 3)));
  REQUIRE_FALSE(threshold_by_name("7/3").admits(Rational(5, 2)));
  REQUIRE_THROWS_AS(threshold_by_name("bogus"), spec_error);
}
