#include <doctest.h>

#include <random>

#include "pbr3/braid.hpp"
#include "pbr3/errors.hpp"
#include "pbr3/floer.hpp"
#include "pbr3/oracle.hpp"
#include "support/random_words.hpp"

using namespace pbr3;

TEST_CASE("hf_rank examples") {
  CHECK(hf_rank(standard_sphere(0), standard_sphere(1)) == 4);
  CHECK(hf_rank(standard_sphere(0), standard_sphere(0)) == 2);
  CHECK(hf_rank(standard_sphere(0), standard_sphere(0, 5)) == 2);

  const SphereObject s0 = standard_sphere(0);
  const SphereObject twisted = spherical_normal_form(parse_word("R2^-1 R3^2 R2"), s0);
  const BigInt doubled = oracle::intersection_of_words(BraidWord(), *twisted.arc.witness);
  CHECK(hf_rank(s0, twisted) == doubled);
  CHECK(hf_rank(s0, twisted) == 32);
}

TEST_CASE("rank report") {
  const RankReport r = rank_query(standard_sphere(0), standard_sphere(3));
  CHECK(r.rank == 12);
  CHECK(r.interior == BigInt(2));
  CHECK_FALSE(rank_query(standard_sphere(2), standard_sphere(2)).interior.has_value());
}

TEST_CASE("hf_rank is symmetric and covariant") {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 200; ++k) {
    const SphereObject a{arc_from_word(testing::random_pure_word(rng, 10)), 0};
    const SphereObject b{arc_from_word(testing::random_pure_word(rng, 10)), 0};
    const BraidWord w = testing::random_pure_word(rng, 10);
    CHECK(hf_rank(a, b) == hf_rank(b, a));
    CHECK(hf_rank(spherical_normal_form(w, a), spherical_normal_form(w, b)) == hf_rank(a, b));
  }
}

TEST_CASE("graded table") {
  CHECK(graded_cf_standard(1) == GradedRankVector{2, 2, 0});
  CHECK(graded_cf_standard(2) == GradedRankVector{3, 4, 1});
  CHECK(graded_cf_standard(3) == GradedRankVector{4, 6, 2});
  CHECK(graded_cf_standard(3).total() == 12);
  CHECK_THROWS_AS(graded_cf_standard(0), DomainError);
  CHECK_THROWS_AS(graded_cf_standard(-2), DomainError);
  for (int i = 1; i <= 20; ++i) {
    CHECK(hf_rank(standard_sphere(0), standard_sphere(-i)) == graded_cf_standard(i).total());
    CHECK(graded_cf_standard(i).euler_characteristic() == 0);
  }
}

TEST_CASE("spherical normal form") {
  const SphereObject s0 = standard_sphere(0);
  const SphereObject shifted = spherical_normal_form(parse_word("R1 R2 R3"), s0);
  CHECK(arcs_equal(shifted.arc, s0.arc));
  CHECK(shifted.shift == 1);
  CHECK(spherical_normal_form(BraidWord(), s0) == s0);
  const SphereObject t0 = spherical_normal_form(parse_word("R3"), s0);
  CHECK(arcs_equal(t0.arc, s0.arc));
  CHECK(t0.shift == 0);
}

TEST_CASE("twist shifts") {
  CHECK(twist_self_shift() == 2);
  const SphereObject s0 = standard_sphere(0);
  for (int n = -3; n <= 3; ++n) {
    CHECK(apply_twist(standard_arc(0), n, s0).shift == 2 * n);
  }
  const SphereObject moved = apply_twist(standard_arc(1), 1, s0);
  CHECK(moved.shift == 0);
  CHECK_FALSE(arcs_equal(moved.arc, s0.arc));
  CHECK(moved.arc.double_curve ==
        act(parse_word("R2^-1 R3 R2"), s0.arc.double_curve));
}

TEST_CASE("orbit transitivity") {
  const SphereObject s0 = standard_sphere(0);
  const SphereObject s3 = standard_sphere(3);
  const BraidWord w = orbit_transitive_word(s0, s3);
  CHECK(w == parse_word("R2^-3"));
  CHECK(act(w, s0.arc.double_curve) == s3.arc.double_curve);
  CHECK(orbit_transitive_word(s3, s3).empty());

  const SphereObject target = apply_twist(standard_arc(5), 1, standard_sphere(2));
  const BraidWord v = orbit_transitive_word(s0, target);
  CHECK(act(v, s0.arc.double_curve) == target.arc.double_curve);

  const SphereObject bare{arc_from_coords(target.arc.double_curve), 0};
  const BraidWord u = orbit_transitive_word(standard_sphere(1), bare);
  CHECK(act(u, standard_arc(1).double_curve) == bare.arc.double_curve);
}
