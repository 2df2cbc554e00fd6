#include <doctest.h>

#include <cstdlib>
#include <random>

#include "pbr3/errors.hpp"
#include "pbr3/lamination.hpp"
#include "pbr3/oracle.hpp"
#include "pbr3/sigma_rules.hpp"
#include "support/random_words.hpp"

using namespace pbr3;

namespace {

const LaminationCoords v0 = base_curve_coords();
const LaminationCoords c12{0, 1};  // around {-1, 0}
const LaminationCoords c23{0, -1};  // around {0, +1}

LaminationCoords random_curve(std::mt19937_64& rng, int length) {
  return act(testing::random_pure_word(rng, length), v0);
}

}  // namespace

TEST_CASE("base curve") {
  CHECK(v0 == LaminationCoords{1, 0});
  CHECK(act(parse_word("R1 R2 R3"), v0) == v0);
  CHECK(act(parse_word("R3"), v0) == v0);
  CHECK(act(parse_word("R3^-7"), v0) == v0);
  CHECK(act(parse_word("R2"), c23) == c23);
  CHECK(act(parse_word("R1"), c12) == c12);
}

TEST_CASE("the centre acts trivially") {
  std::mt19937_64 rng(21);
  const BraidWord delta = parse_word("R1 R2 R3");
  for (int k = 0; k < 200; ++k) {
    const LaminationCoords x = random_curve(rng, 10);
    CHECK(act(delta, x) == x);
    const LaminationCoords y{x.a * 3, x.b * 3};
    CHECK(act(delta, y) == y);
  }
}

TEST_CASE("group action") {
  std::mt19937_64 rng(22);
  for (int k = 0; k < 300; ++k) {
    const BraidWord u = testing::random_pure_word(rng, 10);
    const BraidWord w = testing::random_pure_word(rng, 10);
    const LaminationCoords x = random_curve(rng, 8);
    CHECK(act(u * w, x) == act(u, act(w, x)));
    CHECK(act(w * w.inverse(), x) == x);
    CHECK(act(w.inverse(), act(w, x)) == x);
  }
  CHECK(act(BraidWord(), c12) == c12);
}

TEST_CASE("R2^-1 steps through the standard family") {
  for (int i = 0; i <= 2; ++i) {
    CHECK(act(parse_word("R2^-1"), standard_arc(i).double_curve) ==
          standard_arc(i + 1).double_curve);
  }
}

TEST_CASE("batched powers agree with single steps") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> letter(0, 3);
  std::uniform_int_distribution<int> count(0, 60);
  static constexpr Letter letters[] = {1, -1, 2, -2};
  for (int k = 0; k < 2000; ++k) {
    const LaminationCoords x = random_curve(rng, 6);
    const Letter l = letters[letter(rng)];
    const int m = count(rng);
    BigInt a = x.a, b = x.b;
    rules::apply_power(l, BigInt(m), a, b);
    BigInt a1 = x.a, b1 = x.b;
    for (int s = 0; s < m; ++s) rules::apply(l, a1, b1);
    CHECK(a == a1);
    CHECK(b == b1);
  }
}

TEST_CASE("closed intersection examples") {
  CHECK(intersect_closed(v0, v0) == 0);
  CHECK(intersect_closed(v0, standard_arc(1).double_curve) == 4);
  for (int i = 1; i <= 5; ++i) {
    CHECK(intersect_closed(v0, standard_arc(i).double_curve) == 4 * i);
    CHECK(intersect_closed(v0, standard_arc(-i).double_curve) == 4 * i);
  }
  CHECK(intersect_closed(c12, c23) == 2);
  CHECK(intersect_closed(c12, v0) == 2);
  CHECK(intersect_closed(LaminationCoords{}, v0) == 0);
  CHECK(intersect_closed(LaminationCoords{3, 0}, standard_arc(2).double_curve) == 24);
}

TEST_CASE("intersection is symmetric and equivariant") {
  std::mt19937_64 rng(24);
  for (int k = 0; k < 500; ++k) {
    const BraidWord w = testing::random_pure_word(rng, 10);
    const LaminationCoords a = random_curve(rng, 10);
    const LaminationCoords b = random_curve(rng, 10);
    const BigInt i = intersect_closed(a, b);
    CHECK(intersect_closed(b, a) == i);
    CHECK(intersect_closed(act(w, a), act(w, b)) == i);
    CHECK((i == 0) == (a == b));
  }
}

TEST_CASE("primary algorithm agrees with the slope model") {
  std::mt19937_64 rng(25);
  for (int k = 0; k < 500; ++k) {
    const BraidWord u = testing::random_pure_word(rng, 15);
    const BraidWord w = testing::random_pure_word(rng, 15);
    const LaminationCoords a = act(u, v0);
    const LaminationCoords b = act(w, v0);
    CHECK(intersect_closed(a, b) == oracle::intersection_of_words(u, w));
    CHECK(intersect_closed(a, b) == oracle::intersection_of_coords(a, b));
    CHECK(checked_intersection(a, b) == intersect_closed(a, b));
  }
}

TEST_CASE("arcs") {
  CHECK(arcs_equal(arc_from_word(BraidWord()), standard_arc(0)));
  CHECK(arc_from_word(BraidWord()).witness == BraidWord());
  for (int i = 1; i <= 3; ++i) {
    CHECK(arcs_equal(arc_from_word(parse_word("R2").pow(-i)), standard_arc(i)));
    for (int j = 0; j < i; ++j) CHECK_FALSE(arcs_equal(standard_arc(i), standard_arc(j)));
  }
  std::mt19937_64 rng(26);
  for (int k = 0; k < 100; ++k) {
    const BraidWord w = testing::random_pure_word(rng, 10);
    CHECK(arcs_equal(arc_from_word(w), arc_from_word(w * parse_word("R3"))));
    CHECK(is_arc_double(arc_from_word(w).double_curve));
  }
  CHECK_FALSE(is_arc_double(c12));
  CHECK_FALSE(is_arc_double(LaminationCoords{2, 0}));
  CHECK_THROWS_AS(arc_from_coords(c12), DomainError);
  CHECK(standard_index(standard_arc(-4)) == -4);
  CHECK_FALSE(standard_index(arc_from_word(parse_word("R1 R2^2"))).has_value());
}

TEST_CASE("interior intersections") {
  CHECK(interior_intersection(standard_arc(0), standard_arc(1)) == 0);
  CHECK(interior_intersection(standard_arc(0), standard_arc(3)) == 2);
  CHECK_THROWS_AS(interior_intersection(standard_arc(0), standard_arc(0)), IsotopicArcs);
  for (int i = -6; i <= 6; ++i) {
    for (int j = -6; j <= 6; ++j) {
      if (i == j) continue;
      CHECK(interior_intersection(standard_arc(i), standard_arc(j)) == std::abs(i - j) - 1);
    }
  }
}

TEST_CASE("relax recovers a witness") {
  const Relaxation r0 = relax(v0);
  CHECK(r0.word.empty());
  CHECK(r0.base == "gamma0");

  const LaminationCoords x = act(parse_word("R2^-1 R3 R2 R3^-1"), v0);
  CHECK(act(relax(x).word, v0) == x);

  std::mt19937_64 rng(27);
  for (int k = 0; k < 300; ++k) {
    const LaminationCoords y = random_curve(rng, 15);
    CHECK(act(relax(y).word, v0) == y);
  }
  CHECK_THROWS_AS(relax(c12), NotRecognized);
  CHECK_THROWS_AS(relax(LaminationCoords{2, 0}), NotRecognized);
  CHECK_THROWS_AS(relax(LaminationCoords{}), NotRecognized);
}

TEST_CASE("twist inequality") {
  std::mt19937_64 rng(28);
  for (int k = 0; k < 40; ++k) {
    const ArcClass a = arc_from_word(testing::random_pure_word(rng, 6));
    const ArcClass b = arc_from_word(testing::random_pure_word(rng, 6));
    const ArcClass c = arc_from_word(testing::random_pure_word(rng, 6));
    const BraidWord t = twist_word(c);
    const BigInt iac = intersect_closed(a.double_curve, c.double_curve);
    const BigInt icb = intersect_closed(c.double_curve, b.double_curve);
    const BigInt iab = intersect_closed(a.double_curve, b.double_curve);
    for (int n = 1; n <= 10; ++n) {
      const BigInt lhs = intersect_closed(act(t.pow(n), a.double_curve), b.double_curve);
      BigInt diff = lhs - n * iac * icb;
      if (diff < 0) diff = -diff;
      CHECK(diff <= iab);
    }
  }
}

TEST_CASE("large iterates stay exact") {
  const BraidWord phi = parse_word("R2 R3^-1");
  LaminationCoords x = v0;
  for (int n = 0; n < 200; ++n) x = act(phi, x);
  CHECK(!fits_int64(x.a));
  CHECK(intersect_closed(x, v0) == oracle::intersection_of_coords(x, v0));
  CHECK(act(phi.pow(-200), x) == v0);
}
