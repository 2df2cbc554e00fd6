#pragma once

#include <nlohmann/json.hpp>

#include "pbr3/bigint.hpp"
#include "pbr3/braid.hpp"
#include "pbr3/dynamics.hpp"
#include "pbr3/floer.hpp"
#include "pbr3/ktheory.hpp"
#include "pbr3/lamination.hpp"
#include "pbr3/mat2.hpp"

namespace pbr3::io {

using nlohmann::ordered_json;

// Integers outside the int64 range become decimal strings.
inline ordered_json big(const BigInt& value) {
  if (fits_int64(value)) return value.convert_to<std::int64_t>();
  return value.str();
}

inline ordered_json coords(const LaminationCoords& v) { return {big(v.a), big(v.b)}; }

inline ordered_json arc(const ArcClass& a) {
  ordered_json out;
  out["double"] = coords(a.double_curve);
  out["witness"] = a.witness ? ordered_json(a.witness->str()) : ordered_json(nullptr);
  return out;
}

inline ordered_json sphere(const SphereObject& s) {
  ordered_json out;
  out["arc"] = arc(s.arc);
  out["shift"] = s.shift;
  return out;
}

inline ordered_json decomposition(const CentralDecomposition& d) {
  ordered_json out;
  out["f2"] = d.f2.str();
  out["center"] = d.center;
  return out;
}

inline ordered_json linking(const LinkingVector& lk) { return {lk.lk12, lk.lk13, lk.lk23}; }

inline ordered_json matrix(const Mat2& m) {
  return {{big(m.a), big(m.b)}, {big(m.c), big(m.d)}};
}

inline ordered_json matrix(const KMatrix& m) { return {{m.a, m.b}, {m.c, m.d}}; }

inline ordered_json kclass(const KClass& k) { return {k.x, k.y}; }

inline ordered_json nt(const NTType& type) {
  ordered_json out;
  out["nt"] = nt_name(type);
  std::visit(
      [&](const auto& t) {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, Reducible>) {
          out["pair"] = to_string(t.pair);
          out["power"] = t.power;
          out["conjugator"] = t.conjugator.str();
        }
        out["center"] = t.center;
      },
      type);
  return out;
}

inline ordered_json growth(const GrowthClass& g) {
  ordered_json out;
  out["class"] = growth_name(g);
  if (const auto* l = std::get_if<Linear>(&g)) {
    out["slope"] = {big(l->slope_num), big(l->slope_den)};
  } else if (const auto* e = std::get_if<Exponential>(&g)) {
    out["ratio"] = {big(e->num), big(e->den)};
    out["lambda"] = e->lambda;
    out["error"] = e->error;
  }
  return out;
}

}  // namespace pbr3::io
