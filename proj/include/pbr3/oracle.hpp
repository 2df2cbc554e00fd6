#pragma once

#include "pbr3/bigint.hpp"
#include "pbr3/lamination.hpp"
#include "pbr3/mat2.hpp"
#include "pbr3/word.hpp"

// Independent curve model used to cross-check the lamination engine. The
// disc with three punctures, boundary collapsed, is the pillowcase quotient
// of a torus; essential curves are slopes (q, p) up to sign and two of them
// meet 2 |q p' - p q'| times. Braids act linearly through the reduced Burau
// representation at t = -1. Nothing here calls into sigma_rules.hpp.
namespace pbr3::oracle {

struct SlopeVector {
  BigInt q;
  BigInt p;

  friend bool operator==(const SlopeVector&, const SlopeVector&) = default;
};

// s1 -> [[1,1],[0,1]], s2 -> [[1,0],[-1,1]]; R-words via to_artin.
Mat2 burau_minus_one(const BraidWord& word);

// Slope of c_{gamma_0}.
SlopeVector base_slope();

SlopeVector act(const Mat2& matrix, const SlopeVector& s);

BigInt intersection(const SlopeVector& lhs, const SlopeVector& rhs);

// Slope read off the arc intersection numbers a lamination's coordinates
// encode: beta_l = 2|q|, beta_r = 2|p|, and alpha_down < alpha_up exactly
// when q and p have opposite signs.
SlopeVector slope_from_coords(const LaminationCoords& v);

// Intersection of the images of c_{gamma_0} under two words.
BigInt intersection_of_words(const BraidWord& lhs, const BraidWord& rhs);

BigInt intersection_of_coords(const LaminationCoords& lhs, const LaminationCoords& rhs);

}  // namespace pbr3::oracle

namespace pbr3 {

// intersect_closed, confirmed against the slope model; InvariantViolation
// on disagreement.
BigInt checked_intersection(const LaminationCoords& lhs, const LaminationCoords& rhs);

}  // namespace pbr3
