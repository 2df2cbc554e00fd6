#include "pbr3/floer.hpp"

#include "pbr3/braid.hpp"
#include "pbr3/errors.hpp"

namespace pbr3 {

SphereObject standard_sphere(std::int64_t index, std::int64_t shift) {
  return {standard_arc(index), shift};
}

BigInt hf_rank(const SphereObject& lhs, const SphereObject& rhs) {
  return rank_query(lhs, rhs).rank;
}

RankReport rank_query(const SphereObject& lhs, const SphereObject& rhs) {
  if (arcs_equal(lhs.arc, rhs.arc)) return {2, std::nullopt};
  BigInt interior = interior_intersection(lhs.arc, rhs.arc);
  BigInt rank = 4 + 4 * interior;
  return {std::move(rank), std::move(interior)};
}

GradedRankVector graded_cf_standard(std::int64_t i) {
  if (i <= 0) {
    throw DomainError("graded table needs i >= 1, got " + std::to_string(i));
  }
  return {i + 1, 2 * i, i - 1};
}

SphereObject spherical_normal_form(const BraidWord& word, const SphereObject& base) {
  const BraidWord pure = as_pure(word);
  SphereObject out;
  out.arc.double_curve = act(pure, base.arc.double_curve);
  if (base.arc.witness) out.arc.witness = (pure * *base.arc.witness).reduced();
  out.shift = base.shift + decompose(pure).center;
  return out;
}

SphereObject apply_twist(const ArcClass& along, std::int64_t n, const SphereObject& sphere) {
  if (arcs_equal(along, sphere.arc)) {
    SphereObject out = sphere;
    out.shift += twist_self_shift() * n;
    return out;
  }
  const BraidWord twist = twist_word(along).pow(n).reduced();
  SphereObject out;
  out.arc.double_curve = act(twist, sphere.arc.double_curve);
  if (sphere.arc.witness) out.arc.witness = (twist * *sphere.arc.witness).reduced();
  out.shift = sphere.shift;
  return out;
}

BraidWord orbit_transitive_word(const SphereObject& from, const SphereObject& to) {
  const BraidWord w_from = witness_of(from.arc);
  const BraidWord w_to = witness_of(to.arc);
  BraidWord out = (w_to * w_from.inverse()).reduced();
  if (act(out, from.arc.double_curve) != to.arc.double_curve) {
    throw InvariantViolation("transport word " + out.str() + " misses the target arc");
  }
  return out;
}

}  // namespace pbr3
