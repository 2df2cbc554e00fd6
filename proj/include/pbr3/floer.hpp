#pragma once

#include <cstdint>
#include <optional>

#include "pbr3/bigint.hpp"
#include "pbr3/lamination.hpp"
#include "pbr3/word.hpp"

namespace pbr3 {

// A matching sphere S_gamma with a grading shift [shift]. Shifts are only
// tracked where they are pinned down: the centre acts by [1] and a twist
// acts on its own sphere by [2].
struct SphereObject {
  ArcClass arc;
  std::int64_t shift = 0;

  friend bool operator==(const SphereObject& lhs, const SphereObject& rhs) {
    return arcs_equal(lhs.arc, rhs.arc) && lhs.shift == rhs.shift;
  }
};

// S_i, the sphere over gamma_i.
SphereObject standard_sphere(std::int64_t index, std::int64_t shift = 0);

// Generator counts of CF^* in degrees 0, 1, 2.
struct GradedRankVector {
  std::int64_t r0 = 0;
  std::int64_t r1 = 0;
  std::int64_t r2 = 0;

  std::int64_t total() const { return r0 + r1 + r2; }
  std::int64_t euler_characteristic() const { return r0 - r1 + r2; }
  friend bool operator==(const GradedRankVector&, const GradedRankVector&) = default;
};

// Total rank of HF(S_a, S_b; Z/2): 4 + 4 I for distinct arcs, and 2, the
// rank of H^*(S^3), for a sphere against itself.
BigInt hf_rank(const SphereObject& lhs, const SphereObject& rhs);

struct RankReport {
  BigInt rank;
  std::optional<BigInt> interior;  // empty for isotopic arcs
};

RankReport rank_query(const SphereObject& lhs, const SphereObject& rhs);

// Generators of CF^*(S_0, S_{-i}) by degree: (i + 1, 2i, i - 1). DomainError
// for i <= 0.
GradedRankVector graded_cf_standard(std::int64_t i);

// Image of `base` under the pure braid `word`: the arc moves by the lamination
// action and the shift picks up the centre exponent.
SphereObject spherical_normal_form(const BraidWord& word, const SphereObject& base);

constexpr std::int64_t twist_self_shift() { return 2; }

// Applies t_along^n. On the twist's own sphere this is the shift [2n];
// elsewhere only the arc moves (shifts of other spheres are not modelled).
SphereObject apply_twist(const ArcClass& along, std::int64_t n, const SphereObject& sphere);

// w_b w_a^-1, which carries a.arc to b.arc. Witnesses are recovered with
// relax() when absent (NotRecognized if that fails).
BraidWord orbit_transitive_word(const SphereObject& from, const SphereObject& to);

}  // namespace pbr3
