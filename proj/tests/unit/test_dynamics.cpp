#include <doctest.h>

#include <cmath>
#include <stop_token>

#include "pbr3/dynamics.hpp"
#include "pbr3/errors.hpp"

using namespace pbr3;

TEST_CASE("identity gives a constant series") {
  const GrowthSeries s = growth_series(BraidWord(), standard_arc(0), standard_arc(2), 10);
  REQUIRE(s.samples.size() == 10);
  for (const auto& x : s.samples) CHECK(x.interior == 1);
  CHECK(std::holds_alternative<Bounded>(classify_growth(s)));
}

TEST_CASE("a twist grows linearly") {
  const GrowthSeries s =
      growth_series(parse_word("R2^-1 R3 R2"), standard_arc(0), standard_arc(0), 12);
  REQUIRE(s.samples.size() == 12);
  for (const auto& x : s.samples) CHECK(x.interior == 4 * x.n - 1);
  const GrowthClass g = classify_growth(s);
  REQUIRE(std::holds_alternative<Linear>(g));
  CHECK(std::get<Linear>(g).slope_num == 4);
  CHECK(std::get<Linear>(g).slope_den == 1);

  const GrowthSeries cube =
      growth_series(parse_word("R2^-1 R3^3 R2"), standard_arc(0), standard_arc(0), 10);
  CHECK(std::holds_alternative<Linear>(classify_growth(cube)));
}

TEST_CASE("isotopic iterates are skipped") {
  const GrowthSeries s = growth_series(parse_word("R1 R2 R3"), standard_arc(0), standard_arc(0), 9);
  CHECK(s.samples.empty());
  CHECK(s.skipped.size() == 9);
  CHECK_THROWS_AS(classify_growth(s), Inconclusive);
  CHECK_THROWS_AS(growth_series(BraidWord(), standard_arc(0), standard_arc(1), 0), DomainError);
}

TEST_CASE("pseudo-Anosov growth") {
  const GrowthSeries s = growth_series(parse_word("R2 R3^-1"), standard_arc(0), standard_arc(0), 30);
  for (std::size_t k = 3; k < s.samples.size(); ++k) {
    CHECK(s.samples[k].interior > s.samples[k - 1].interior);
    CHECK(s.samples[k].interior - s.samples[k - 1].interior >
          s.samples[k - 1].interior - s.samples[k - 2].interior);
  }
  const GrowthClass g = classify_growth(s);
  REQUIRE(std::holds_alternative<Exponential>(g));
  const auto& e = std::get<Exponential>(g);
  CHECK(e.lambda == doctest::Approx(3 + 2 * std::sqrt(2.0)).epsilon(1e-9));
  CHECK(e.error < 1e-9);
}

TEST_CASE("series extend and stop") {
  const BraidWord phi = parse_word("R2 R3^-1");
  GrowthSeries s = growth_series(phi, standard_arc(0), standard_arc(1), 5);
  extend(s, 7);
  const GrowthSeries full = growth_series(phi, standard_arc(0), standard_arc(1), 12);
  REQUIRE(s.samples.size() == full.samples.size());
  for (std::size_t k = 0; k < s.samples.size(); ++k) {
    CHECK(s.samples[k].interior == full.samples[k].interior);
  }
  std::stop_source stop;
  stop.request_stop();
  CHECK(growth_series(phi, standard_arc(0), standard_arc(1), 50, stop.get_token()).computed == 0);
}

TEST_CASE("dilatation oracle") {
  const Dilatation d = dilatation_oracle(parse_word("R2 R3^-1"));
  CHECK(d.matrix == Mat2{3, -2, -4, 3});
  CHECK(d.trace == 6);
  const double exact = 3 + 2 * std::sqrt(2.0);
  CHECK(d.lower <= exact);
  CHECK(d.upper >= exact);
  CHECK(d.lambda == doctest::Approx(exact));
  CHECK(dilatation_oracle(parse_word("s2 s1^-2 s2")).trace == 6);
  CHECK_THROWS_AS(dilatation_oracle(parse_word("R1 R2 R3")), NotPseudoAnosov);
  CHECK_THROWS_AS(dilatation_oracle(parse_word("R2^-1 R3^3 R2")), NotPseudoAnosov);
}

TEST_CASE("penner check") {
  CHECK(penner_check(3 + 2 * std::sqrt(2.0)));
  CHECK_FALSE(penner_check(1.01));
  CHECK(penner_check(std::exp(std::log(2.0) / 12)));
  CHECK_FALSE(penner_check(0.0));
}

TEST_CASE("cross-validation") {
  for (const char* w : {"R2^-1 R3^5 R2", "R3^5", "R1 R2 R3 R1 R2 R3", "R2^2 R3^-1", "R2 R3^-1"}) {
    const CrossValidation r = crossvalidate_nt(parse_word(w), 12);
    CHECK_MESSAGE(r.ok, w);
  }
  const CrossValidation pa = crossvalidate_nt(parse_word("R2 R3^-1"), 12);
  REQUIRE(pa.lambda.has_value());
  CHECK(*pa.penner_ok);
  CHECK_THROWS_AS(crossvalidate_nt(parse_word("R2"), 7), DomainError);
}
