#pragma once

#include <cstdlib>

#include "pbr3/word.hpp"

// Piecewise-linear action of the half twists on the coordinates (a, b) of
// integral laminations of the 3-punctured disc. With alpha_up / alpha_down
// the intersection numbers with the vertical arcs above / below the middle
// puncture and beta_l / beta_r those with the vertical lines left / right of
// it, a = (alpha_down - alpha_up) / 2 and b = (beta_l - beta_r) / 2.
//
// Templated on the integer type so hot enumeration loops can run on machine
// words; library entry points use BigInt.
namespace pbr3::rules {

template <class Int>
Int pos(const Int& x) {
  return x > 0 ? x : Int(0);
}

template <class Int>
Int neg(const Int& x) {
  return x < 0 ? x : Int(0);
}

template <class Int>
void sigma1(Int& a, Int& b) {
  Int nb = a + pos(b);
  a = pos(nb) - b;
  b = nb;
}

template <class Int>
void sigma1_inv(Int& a, Int& b) {
  Int nb = pos(b) - a;
  a = b - pos(nb);
  b = nb;
}

template <class Int>
void sigma2(Int& a, Int& b) {
  Int nb = a + neg(b);
  a = neg(nb) - b;
  b = nb;
}

template <class Int>
void sigma2_inv(Int& a, Int& b) {
  Int nb = neg(b) - a;
  a = b - neg(nb);
  b = nb;
}

template <class Int>
void apply(Letter letter, Int& a, Int& b) {
  switch (letter) {
    case 1: sigma1(a, b); break;
    case -1: sigma1_inv(a, b); break;
    case 2: sigma2(a, b); break;
    default: sigma2_inv(a, b); break;
  }
}

// s1^m for m >= 0. On the cone {b >= 0, a + b >= 0} the map is linear,
// (a, b) -> (a, a + b), and every orbit reaches it within three steps, so
// long runs cost O(1) big-integer operations.
template <class Int>
void sigma1_power(Int& a, Int& b, Int m) {
  while (m > 0) {
    if (b >= 0 && a + b >= 0) {
      if (a >= 0) {
        b += m * a;
        return;
      }
      Int steps = b / (-a);
      if (steps > m) steps = m;
      b += steps * a;
      m -= steps;
      continue;
    }
    sigma1(a, b);
    m -= 1;
  }
}

// The other three generators are conjugates of s1 by the reflections
// (a, b) -> (-a, b) (top/bottom), (a, b) -> (a, -b) (left/right) and their
// product.
template <class Int>
void apply_power(Letter letter, const Int& count, Int& a, Int& b) {
  switch (letter) {
    case 1:
      sigma1_power(a, b, count);
      break;
    case -1:
      a = -a;
      sigma1_power(a, b, count);
      a = -a;
      break;
    case -2:
      b = -b;
      sigma1_power(a, b, count);
      b = -b;
      break;
    default:
      a = -a;
      b = -b;
      sigma1_power(a, b, count);
      a = -a;
      b = -b;
      break;
  }
}

}  // namespace pbr3::rules
