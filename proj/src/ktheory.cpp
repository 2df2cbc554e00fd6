#include "pbr3/ktheory.hpp"

#include <cstdlib>
#include <set>
#include <utility>

#include "pbr3/braid.hpp"
#include "pbr3/errors.hpp"

namespace pbr3 {

KMatrix k_rep(const BraidWord& word) {
  const CentralDecomposition decomposition = decompose(word);
  std::int64_t r2_exponent = 0;
  for (Letter letter : decomposition.f2.letters()) {
    if (std::abs(letter) == 2) r2_exponent += letter > 0 ? 1 : -1;
  }
  const std::int64_t sign = decomposition.center % 2 == 0 ? 1 : -1;
  return {sign, sign * r2_exponent, 0, sign};
}

KClass k_class_of_sphere(std::int64_t index) { return {-index, 1}; }

KClass picard_lefschetz(const KClass& target, const KClass& sphere, std::int64_t chi) {
  return {target.x - chi * sphere.x, target.y - chi * sphere.y};
}

std::int64_t euler_pairing_spheres(const SphereObject& lhs, const SphereObject& rhs) {
  const auto i = standard_index(lhs.arc);
  const auto j = standard_index(rhs.arc);
  if (i && j && *i != *j) {
    const std::int64_t alternating = graded_cf_standard(std::llabs(*i - *j)).euler_characteristic();
    if (alternating != 0) {
      throw InvariantViolation("graded table has nonzero Euler characteristic");
    }
  }
  return 0;
}

bool homology_distinct(std::span<const std::int64_t> indices) {
  const std::set<std::int64_t> distinct(indices.begin(), indices.end());
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  for (std::int64_t index : distinct) {
    KClass c = k_class_of_sphere(index);
    if (c.x < 0 || (c.x == 0 && c.y < 0)) c = {-c.x, -c.y};
    if (!seen.emplace(c.x, c.y).second) return false;
  }
  return true;
}

}  // namespace pbr3
