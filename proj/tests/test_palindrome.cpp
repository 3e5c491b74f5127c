#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "wordsym/catalog.hpp"
#include "wordsym/palindrome.hpp"
#include "wordsym/stabilize.hpp"

using namespace wordsym;

TEST_CASE("theta palindrome recognition") {
  const GroupElement S = catalog::S(), R = catalog::reversal(3);
  Word ac00 = parse_word(std::string(catalog::word_A()) + catalog::word_C() + "00");
  REQUIRE(is_theta_palindrome(ac00, S));
  REQUIRE(is_theta_palindrome(Word(), S));
  REQUIRE(is_theta_palindrome(Word(), R));
  REQUIRE(is_theta_palindrome(parse_word("12"), S));
  REQUIRE_FALSE(is_theta_palindrome(parse_word("12"), R));
  REQUIRE_THROWS_AS(is_theta_palindrome(parse_word("0"), catalog::identity(3)), contract_error);
}

TEST_CASE("palindromic complexity of z") {
  StabilizationResult st = stabilize(catalog::sequence("z"), 12);
  REQUIRE(st.stabilized);
  const GroupElement R = catalog::reversal(3), S = catalog::S();
  REQUIRE(pal_complexity(st.index, R, 0) == 1);
  REQUIRE(pal_complexity(st.index, R, 1) == 3);
  REQUIRE(pal_complexity(st.index, R, 2) == 3);
  REQUIRE(pal_complexity(st.index, R, 3) == 4);
  REQUIRE(pal_complexity(st.index, R, 7) == 2);
  REQUIRE(pal_complexity(st.index, R, 8) == 4);
  REQUIRE(pal_complexity(st.index, S, 3) == 0);
  REQUIRE(pal_complexity(st.index, S, 8) == 2);

  PalComplexityTable table = pal_complexity_table(st.index, S, 12, st.stabilized);
  REQUIRE(table.values[4] == 2);
  REQUIRE(table.stabilized);
}

TEST_CASE("conjugation covariance of theta palindromes") {
  std::mt19937 rng(101);
  const SymmetryGroup g4 = catalog::group_ternary();
  for (int trial = 0; trial < 300; ++trial) {
    Word w = oracle::random_word(rng, 10, 3);
    for (const GroupElement& theta : g4.involutive_antimorphisms()) {
      if (!is_theta_palindrome(w, theta)) continue;
      for (const GroupElement& eta : g4.elements()) {
        GroupElement conj = compose(eta, compose(theta, eta.inverse()));
        REQUIRE(conj.antimorphism());
        REQUIRE(is_theta_palindrome(eta.apply(w), conj));
      }
    }
  }
}

TEST_CASE("richness defect basics") {
  REQUIRE(richness_defect(parse_word("0102")) == 0);
  REQUIRE(richness_defect(Word()) == 0);
  REQUIRE(richness_defect(parse_word("0")) == 0);
}

TEST_CASE("eertree agrees with brute palindrome counting") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 600; ++trial) {
    Word w = oracle::random_word(rng, 20, 3);
    REQUIRE(richness_defect(w) == oracle::richness_defect(w));
  }
}

TEST_CASE("z is rich, Thue-Morse is not") {
  Word z = pipeline_prefix(catalog::sequence("z"), 10000);
  REQUIRE(richness_defect(z) == 0);
  Word tm = pipeline_prefix(catalog::sequence("tm"), 10000);
  REQUIRE(richness_defect(tm) > 0);
}

TEST_CASE("richness is factorial on prefixes of z") {
  Word z = pipeline_prefix(catalog::sequence("z"), 3000);
  for (std::size_t len : {1u, 10u, 100u, 1000u, 3000u}) {
    REQUIRE(richness_defect(WordView(z).substr(0, len)) == 0);
  }
}

TEST_CASE("first defect length of Thue-Morse") {
  Word tm = pipeline_prefix(catalog::sequence("tm"), 64);
  auto first = first_defect_length(tm);
  REQUIRE(first.has_value());
  REQUIRE(*first == 9);
  // and the brute count agrees at that point
  REQUIRE(oracle::richness_defect(WordView(tm).substr(0, 9)) == 1);
  REQUIRE(oracle::richness_defect(WordView(tm).substr(0, 8)) == 0);

  Word z = pipeline_prefix(catalog::sequence("z"), 2000);
  REQUIRE_FALSE(first_defect_length(z).has_value());
}

TEST_CASE("s-palindrome family") {
  const std::string A = catalog::word_A(), B = catalog::word_B(), C = catalog::word_C(),
                    D = catalog::word_D();
  Word x0 = catalog::s_palindrome_family(0);
  REQUIRE(x0 == parse_word(A + C + "00"));
  REQUIRE(x0.size() == 18);
  Word x1 = catalog::s_palindrome_family(1);
  REQUIRE(x1 == parse_word(A + A + C + C + "00"));
  Word x2 = catalog::s_palindrome_family(2);
  REQUIRE(x2 == parse_word(A + A + D + A + A + C + C + B + C + C + "00"));

  Word z = pipeline_prefix(catalog::sequence("z"), 100000);
  for (int k = 0; k <= 4; ++k) {
    Word xk = catalog::s_palindrome_family(k, &z);
    REQUIRE(xk.size() % 2 == 0);
    REQUIRE(is_theta_palindrome(xk, catalog::S()));
  }
}

TEST_CASE("central factors of x_k are distinct S-palindromes from their reversals") {
  const GroupElement S = catalog::S();
  Word x2 = catalog::s_palindrome_family(2);
  for (std::size_t n = 2; n <= 8; ++n) {
    Word central = Word(WordView(x2).substr(x2.size() / 2 - n, 2 * n));
    Word rev = reversed(central);
    REQUIRE(is_theta_palindrome(central, S));
    REQUIRE(is_theta_palindrome(rev, S));
    REQUIRE(central != rev);
  }
}

TEST_CASE("no odd S-palindromic factor occurs in z") {
  StabilizationResult st = stabilize(catalog::sequence("z"), 41);
  const GroupElement S = catalog::S();
  for (std::size_t m = 3; m <= 41; m += 2) {
    REQUIRE(st.index.theta_palindrome_count(m, S) == 0);
  }
  // P_S(1) = 1: the letter 0 is fixed by S
  REQUIRE(st.index.theta_palindrome_count(1, S) == 1);
}
