#include <doctest.h>

#include <random>

#include "pbr3/braid.hpp"
#include "pbr3/errors.hpp"
#include "pbr3/word.hpp"
#include "support/random_words.hpp"

using namespace pbr3;

TEST_CASE("parse expands powers") {
  const BraidWord w = parse_word("R2^-3 R3 R2^3", Alphabet::Pure);
  CHECK(w.size() == 7);
  CHECK(w.letters() == std::vector<Letter>{-2, -2, -2, 3, 2, 2, 2});
  CHECK(w.str() == "R2^-3 R3 R2^3");
}

TEST_CASE("parse empty and id") {
  CHECK(parse_word("", Alphabet::Pure).empty());
  CHECK(parse_word("   ").empty());
  CHECK(parse_word("id").empty());
  CHECK(BraidWord().str() == "id");
}

TEST_CASE("parse errors carry offsets") {
  CHECK_THROWS_AS(parse_word("R4", Alphabet::Pure), ParseError);
  try {
    parse_word("R2 R3 x1");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 6);
  }
  CHECK_THROWS_AS(parse_word("R2^"), ParseError);
  CHECK_THROWS_AS(parse_word("R2^abc"), ParseError);
  CHECK_THROWS_AS(parse_word("R2 s1"), ParseError);
  CHECK_THROWS_AS(parse_word("s1", Alphabet::Pure), ParseError);
  CHECK_THROWS_AS(parse_word("R2^99999999999"), ParseError);
}

TEST_CASE("artin alphabet parses") {
  const BraidWord w = parse_word("s1^2 s2^-1");
  CHECK(w.alphabet() == Alphabet::Artin);
  CHECK(w.letters() == std::vector<Letter>{1, 1, -2});
}

TEST_CASE("to_artin dictionary") {
  CHECK(to_artin(parse_word("R2")).str() == "s2^2");
  CHECK(to_artin(parse_word("R3")).str() == "s2^-1 s1^2 s2");
  CHECK(to_artin(parse_word("R1 R2 R3")).str() == "s1 s2 s1 s2 s1 s2");
  CHECK(to_artin(BraidWord()).empty());
}

TEST_CASE("from_artin inverts to_artin in the group") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 300; ++k) {
    const BraidWord w = testing::random_pure_word(rng, 12);
    CHECK(same_element(from_artin(to_artin(w)), w));
  }
  CHECK(same_element(from_artin(parse_word("s1^2")), parse_word("R1")));
}

TEST_CASE("from_artin rejects non-pure braids") {
  CHECK_THROWS_AS(from_artin(parse_word("s1")), NotPure);
  CHECK_THROWS_AS(from_artin(parse_word("s1 s2")), NotPure);
  CHECK(strand_permutation(parse_word("s1 s2 s1 s2 s1 s2")) == std::vector<int>{1, 2, 3});
}

TEST_CASE("inverse, reduced and pow") {
  const BraidWord w = parse_word("R1 R2^-1 R3");
  CHECK((w * w.inverse()).reduced().empty());
  CHECK(w.pow(0).empty());
  CHECK(w.pow(-2) == w.inverse() * w.inverse());
}
