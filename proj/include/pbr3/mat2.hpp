#pragma once

#include <string>

#include "pbr3/bigint.hpp"

namespace pbr3 {

// 2x2 integer matrix, row-major.
struct Mat2 {
  BigInt a = 1, b = 0, c = 0, d = 1;

  static Mat2 identity() { return {}; }

  BigInt trace() const { return a + d; }
  BigInt det() const { return a * d - b * c; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;

  std::string str() const {
    return "[[" + a.str() + ", " + b.str() + "], [" + c.str() + ", " + d.str() + "]]";
  }
};

}  // namespace pbr3
