#include <doctest.h>

#include <set>

#include "pbr3/braid.hpp"
#include "pbr3/errors.hpp"
#include "pbr3/orbit.hpp"

using namespace pbr3;

TEST_CASE("reduced word counts") {
  CHECK(reduced_words(0).size() == 1);
  CHECK(reduced_words(1).size() == 7);
  CHECK(reduced_words(4).size() == 937);
  const auto words = reduced_words(2);
  CHECK(words[1] == parse_word("R1"));
  CHECK(words[2] == parse_word("R1^-1"));
  CHECK(words[7] == parse_word("R1^2"));
  CHECK(words[8] == parse_word("R1 R2"));
  for (const auto& w : words) CHECK(w.reduced() == w);
}

TEST_CASE("small censuses") {
  CHECK(orbit_census(BraidWord(), 0).arcs.size() == 1);
  const OrbitCensus r1 = orbit_census(BraidWord(), 1);
  CHECK(r1.words == 7);
  // R3 and R3^-1 fix gamma0, and R1^-1 gamma0 = R2 gamma0 = gamma_-1.
  CHECK(act(parse_word("R1^-1"), base_curve_coords()) == standard_arc(-1).double_curve);
  CHECK(r1.arcs.size() == 4);
  for (const auto& entry : orbit_census(BraidWord(), 2).arcs) {
    CHECK(in_pbr3c(twist_word(entry.arc)));
    CHECK(act(*entry.arc.witness, base_curve_coords()) == entry.arc.double_curve);
  }
}

TEST_CASE("census bounds") {
  CHECK_THROWS_AS(orbit_census(BraidWord(), 6), BoundExceeded);
  CHECK_THROWS_AS(orbit_census(BraidWord(), -1), BoundExceeded);
  CHECK_NOTHROW(orbit_census(BraidWord(), 1, 1));
}

TEST_CASE("census with a base word") {
  const OrbitCensus c = orbit_census(parse_word("R2^-2"), 1);
  CHECK(c.arcs.front().arc.double_curve == standard_arc(2).double_curve);
  std::set<std::pair<BigInt, BigInt>> seen;
  for (const auto& e : c.arcs) CHECK(seen.insert({e.arc.double_curve.a, e.arc.double_curve.b}).second);
}
