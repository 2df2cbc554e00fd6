#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace pbr3 {

// Coordinates grow like lambda^n under pseudo-Anosov iteration, so every
// exact quantity that depends on iteration counts is unbounded.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& value) { return value.str(); }

inline bool fits_int64(const BigInt& value) {
  return value >= std::numeric_limits<std::int64_t>::min() &&
         value <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace pbr3
