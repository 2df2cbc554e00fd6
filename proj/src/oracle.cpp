#include "pbr3/oracle.hpp"

#include <cstdlib>

#include "pbr3/errors.hpp"

namespace pbr3::oracle {

namespace {

BigInt abs_value(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

Mat2 generator_matrix(Letter letter) {
  switch (letter) {
    case 1: return {1, 1, 0, 1};
    case -1: return {1, -1, 0, 1};
    case 2: return {1, 0, -1, 1};
    default: return {1, 0, 1, 1};
  }
}

}  // namespace

Mat2 burau_minus_one(const BraidWord& word) {
  Mat2 out;
  const BraidWord artin = to_artin(word);
  for (Letter letter : artin.letters()) out = out * generator_matrix(letter);
  return out;
}

SlopeVector base_slope() { return {1, 1}; }

SlopeVector act(const Mat2& m, const SlopeVector& s) {
  return {m.a * s.q + m.b * s.p, m.c * s.q + m.d * s.p};
}

BigInt intersection(const SlopeVector& lhs, const SlopeVector& rhs) {
  return 2 * abs_value(lhs.q * rhs.p - lhs.p * rhs.q);
}

SlopeVector slope_from_coords(const LaminationCoords& v) {
  const BigInt abs_a = abs_value(v.a);
  const BigInt abs_b = abs_value(v.b);
  const BigInt alpha_up = abs_a + abs_b - v.a;
  const BigInt alpha_down = abs_a + abs_b + v.a;
  const BigInt beta_left = 2 * (abs_a + (v.b > 0 ? v.b : BigInt(0)));
  const BigInt beta_right = 2 * (abs_a + (v.b < 0 ? BigInt(-v.b) : BigInt(0)));
  const BigInt q = beta_left / 2;
  const BigInt p = beta_right / 2;
  // alpha_down = |q + p| and alpha_up = |q - p|.
  return {q, alpha_down < alpha_up ? BigInt(-p) : p};
}

BigInt intersection_of_words(const BraidWord& lhs, const BraidWord& rhs) {
  return intersection(act(burau_minus_one(lhs), base_slope()),
                      act(burau_minus_one(rhs), base_slope()));
}

BigInt intersection_of_coords(const LaminationCoords& lhs, const LaminationCoords& rhs) {
  return intersection(slope_from_coords(lhs), slope_from_coords(rhs));
}

}  // namespace pbr3::oracle

namespace pbr3 {

BigInt checked_intersection(const LaminationCoords& lhs, const LaminationCoords& rhs) {
  const BigInt primary = intersect_closed(lhs, rhs);
  const BigInt independent = oracle::intersection_of_coords(lhs, rhs);
  if (primary != independent) {
    throw InvariantViolation("intersection mismatch for " + to_string(lhs) + " and " +
                             to_string(rhs) + ": engine " + primary.str() +
                             ", slope model " + independent.str());
  }
  return primary;
}

}  // namespace pbr3
