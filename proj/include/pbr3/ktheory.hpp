#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "pbr3/floer.hpp"
#include "pbr3/word.hpp"

namespace pbr3 {

// Numerical K-theory Z^2 in the basis e1 = [O_C] - [O_C(-1)], e2 = [O_C].
// [S_0] = e2 and [S_1] = e2 - e1.
struct KClass {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const KClass&, const KClass&) = default;
};

struct KMatrix {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  static KMatrix identity() { return {}; }
  std::int64_t det() const { return a * d - b * c; }
  KClass operator()(const KClass& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }

  friend KMatrix operator*(const KMatrix& x, const KMatrix& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const KMatrix&, const KMatrix&) = default;
};

// R2 acts as tensoring with the line bundle, U = [[1,1],[0,1]]; R3 and every
// compactly supported twist act trivially; the centre is the shift [1] and
// negates classes. Hence k_rep(w) = (-1)^center U^{e} with e the R2-exponent
// of the free part.
KMatrix k_rep(const BraidWord& word);

// [S_i] = U^-i e2 = (-i, 1).
KClass k_class_of_sphere(std::int64_t index);

// A -> A - chi [S].
KClass picard_lefschetz(const KClass& target, const KClass& sphere, std::int64_t chi);

// The Euler pairing of two spheres. The intersection pairing on H_3 vanishes,
// so this is 0; for pairs from the standard family it is also checked
// against the alternating sum of the graded generator table.
std::int64_t euler_pairing_spheres(const SphereObject& lhs, const SphereObject& rhs);

// True iff the classes [S_i] of the given indices are pairwise distinct up
// to a global sign.
bool homology_distinct(std::span<const std::int64_t> indices);

}  // namespace pbr3
