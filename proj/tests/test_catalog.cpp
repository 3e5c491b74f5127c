#include <catch2/catch_amalgamated.hpp>

#include "wordsym/catalog.hpp"
#include "wordsym/verify.hpp"

using namespace wordsym;

namespace {

void expect_images(const Morphism& m, const std::vector<std::string>& images) {
  REQUIRE(m.source().size() == static_cast<int>(images.size()));
  for (std::size_t c = 0; c < images.size(); ++c) {
    REQUIRE(format_word(m.image(static_cast<Letter>(c))) == images[c]);
  }
}

}  // namespace

TEST_CASE("catalog letter images are byte-identical to the source tables") {
  expect_images(catalog::f(), {"01", "022", "02"});
  expect_images(catalog::g(), {"20", "21", "2"});
  expect_images(catalog::phi(), {"01", "02", "03", "04", "044"});
  expect_images(catalog::psi(), {"0", "1", "22", "202", "20102"});
  expect_images(catalog::f_bin(), {"0", "01", "011"});
  expect_images(catalog::g_bin(), {"011", "0121", "012121"});
  expect_images(catalog::h(), {"01", "02", "022"});
  expect_images(catalog::thue_morse(), {"01", "10"});

  const std::string A = catalog::word_A(), B = catalog::word_B(), C = catalog::word_C(),
                    D = catalog::word_D();
  REQUIRE(A == "00101101");
  REQUIRE(B == "001");
  REQUIRE(C == "00202202");
  REQUIRE(D == "002");
  expect_images(catalog::xi(), {A, A + D, A + C, A + C + C, A + C + C + B + C + C});

  const ParityTransducer tau = catalog::tau();
  REQUIRE(format_word(tau.image(0, Parity::even)) == B);
  REQUIRE(format_word(tau.image(1, Parity::even)) == A);
  REQUIRE(format_word(tau.image(2, Parity::even)) == A + A);
  REQUIRE(format_word(tau.image(0, Parity::odd)) == D);
  REQUIRE(format_word(tau.image(1, Parity::odd)) == C);
  REQUIRE(format_word(tau.image(2, Parity::odd)) == C + C);
}

TEST_CASE("published prefix of u") {
  const std::string golden =
      "010201030102010401020103010201044010201030102010401020103010201044044"
      "0102";
  REQUIRE(format_word(fixed_point_prefix(catalog::phi(), 0, golden.size())) == golden);
}

TEST_CASE("z prefix golden value") {
  REQUIRE(format_word(pipeline_prefix(catalog::sequence("z"), 64)) ==
          "0010110100101101002001011010010110100202202001011010010110100200");
}

TEST_CASE("both z pipelines agree at several lengths") {
  for (std::size_t len : {10u, 1000u, 100000u}) {
    REQUIRE(pipeline_prefix(catalog::sequence("z"), len) ==
            pipeline_prefix(catalog::sequence("z_xi"), len));
  }
}

TEST_CASE("unknown names are rejected") {
  REQUIRE_THROWS_AS(catalog::sequence("nope"), spec_error);
  REQUIRE_THROWS_AS(catalog::group_by_name("nope", 3), spec_error);
  REQUIRE_THROWS_AS(run_verify_suite("nope"), spec_error);
}

TEST_CASE("verify lemma1") {
  VerifyReport rep = verify_lemma1(3, 2000);
  REQUIRE(rep.pass);
  REQUIRE(rep.witnesses.empty());
}

TEST_CASE("verify prop2") {
  VerifyReport rep = verify_prop2(20000);
  REQUIRE(rep.pass);
}

TEST_CASE("verify prop5 at reduced scale") {
  VerifyReport rep = verify_prop5(40);
  REQUIRE(rep.pass);
  REQUIRE(rep.stabilized);
}

TEST_CASE("verify lemma7 at reduced scale") {
  VerifyReport rep = verify_lemma7(2, 6);
  REQUIRE(rep.pass);
  REQUIRE(rep.params["seeds_checked"].get<std::size_t>() >= 3);  // eps, 2, 03 at least
}

TEST_CASE("verify prop8 at reduced scale") {
  VerifyReport rep = verify_prop8(20);
  REQUIRE(rep.pass);
  REQUIRE(rep.params["P_S_even_from_4"].size() == 19);
}

TEST_CASE("verify thm9 at reduced scale") {
  VerifyReport rep = verify_thm9(25);
  REQUIRE(rep.pass);
}

TEST_CASE("verify binary at reduced scale") {
  VerifyReport rep = verify_binary(25, 400, 20000);
  REQUIRE(rep.pass);
}

TEST_CASE("verify thue_morse at reduced scale") {
  VerifyReport rep = verify_thue_morse(25, 400, 4000);
  REQUIRE(rep.pass);
  REQUIRE(rep.params["first_defect_length"].get<std::size_t>() == 9);
  REQUIRE(rep.params["square_witness"].get<std::string>() == "00");
}

TEST_CASE("verify constants") {
  VerifyReport rep = verify_constants();
  REQUIRE(rep.pass);
}

TEST_CASE("report json shape and determinism") {
  VerifyReport rep = verify_lemma1(2, 100);
  nlohmann::json j = rep.to_json();
  REQUIRE(j["claim"] == "lemma1");
  REQUIRE(j["pass"] == true);
  REQUIRE_FALSE(j.contains("volatile"));
  nlohmann::json timed = rep.to_json(true);
  REQUIRE(timed.contains("volatile"));
  // identical runs give identical bytes
  REQUIRE(verify_lemma1(2, 100).to_json().dump() == j.dump());
}
