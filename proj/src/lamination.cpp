#include "pbr3/lamination.hpp"

#include <array>
#include <cstdlib>
#include <utility>

#include <boost/multiprecision/integer.hpp>

#include "pbr3/errors.hpp"
#include "pbr3/sigma_rules.hpp"

namespace pbr3 {

namespace {

BigInt abs_value(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

LaminationCoords power_image(Letter letter, const BigInt& count,
                             LaminationCoords v) {
  rules::apply_power(letter, count, v.a, v.b);
  return v;
}

// A move is a power of one generator; `apply` maps it onto coordinates.
struct Move {
  Letter letter;
  BigInt count;
};

// Among the given generators, picks the one whose best power lowers the norm
// the most. The norm along x^m v is convex in m, so the best power is found
// by doubling then bisection. Returns nullopt when nothing lowers the norm.
template <class ApplyFn>
std::optional<Move> best_reducing_move(const LaminationCoords& v,
                                       const std::vector<Letter>& generators,
                                       ApplyFn apply) {
  const BigInt current = norm(v);
  std::optional<Move> best;
  BigInt best_norm = current;
  for (Letter letter : generators) {
    auto value = [&](const BigInt& m) { return norm(apply(letter, m, v)); };
    if (value(1) >= current) continue;
    BigInt hi = 1;
    while (value(hi + 1) < value(hi)) hi *= 2;
    BigInt lo = 1;  // smallest m with value(m + 1) >= value(m) lies in [lo, hi]
    while (lo < hi) {
      const BigInt mid = (lo + hi) / 2;
      if (value(mid + 1) >= value(mid)) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    const BigInt reached = value(lo);
    if (reached < best_norm) {
      best_norm = reached;
      best = Move{letter, lo};
    }
  }
  return best;
}

LaminationCoords primitive_part(const LaminationCoords& v, const BigInt& k) {
  return {v.a / k, v.b / k};
}

}  // namespace

std::string to_string(const LaminationCoords& v) {
  return "[" + v.a.str() + ", " + v.b.str() + "]";
}

BigInt norm(const LaminationCoords& v) { return abs_value(v.a) + abs_value(v.b); }

BigInt multiplicity(const LaminationCoords& v) {
  return boost::multiprecision::gcd(abs_value(v.a), abs_value(v.b));
}

LaminationCoords base_curve_coords() { return {1, 0}; }

CompiledWord compile(const BraidWord& word) {
  const BraidWord artin = to_artin(word);
  CompiledWord out;
  const auto& letters = artin.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    if (!out.runs.empty() && out.runs.back().letter == *it) {
      out.runs.back().count += 1;
    } else {
      out.runs.push_back({*it, 1});
    }
  }
  return out;
}

LaminationCoords act(const CompiledWord& word, LaminationCoords v) {
  for (const auto& run : word.runs) rules::apply_power(run.letter, run.count, v.a, v.b);
  return v;
}

LaminationCoords act(const BraidWord& word, const LaminationCoords& v) {
  return act(compile(word), v);
}

BigInt intersect_closed(const LaminationCoords& lhs, const LaminationCoords& rhs) {
  if (lhs.empty() || rhs.empty()) return 0;
  const BigInt k = multiplicity(lhs);
  LaminationCoords curve = primitive_part(lhs, k);
  LaminationCoords other = rhs;
  static const std::vector<Letter> kHalfTwists{1, -1, 2, -2};

  auto apply_both = [&](Letter letter, const BigInt& count) {
    rules::apply_power(letter, count, curve.a, curve.b);
    rules::apply_power(letter, count, other.a, other.b);
  };

  while (norm(curve) > 1) {
    const auto move = best_reducing_move(curve, kHalfTwists, power_image);
    if (!move) {
      throw InvariantViolation("relaxation stalled at " + to_string(curve));
    }
    apply_both(move->letter, move->count);
  }
  // Norm one: the curves around {-1,0}, {0,+1} and around {-1,+1} below or
  // above 0. Bring the curve to the one around {-1, 0}, i.e. (0, 1).
  if (curve == LaminationCoords{0, -1}) apply_both(1, 1);
  if (curve == LaminationCoords{1, 0}) apply_both(2, 1);
  if (curve == LaminationCoords{-1, 0}) apply_both(-2, 1);
  if (curve != LaminationCoords{0, 1}) {
    throw InvariantViolation("relaxation ended at " + to_string(curve));
  }
  // The curve around {-1, 0} is the boundary of a neighbourhood of the arc
  // from +1 to the outer boundary; it meets `other` beta_r times.
  const BigInt beta_right = 2 * (abs_value(other.a) + rules::pos(BigInt(-other.b)));
  return k * beta_right;
}

bool is_arc_double(const LaminationCoords& v) {
  if (v.empty() || multiplicity(v) != 1) return false;
  // Both outer punctures on the same side <=> both slope entries odd.
  return boost::multiprecision::bit_test(abs_value(v.a), 0) &&
         !boost::multiprecision::bit_test(abs_value(v.b), 0);
}

ArcClass arc_from_word(const BraidWord& word) {
  BraidWord pure = as_pure(word);
  ArcClass arc;
  arc.double_curve = act(pure, base_curve_coords());
  arc.witness = std::move(pure);
  return arc;
}

ArcClass arc_from_coords(const LaminationCoords& v) {
  if (!is_arc_double(v)) {
    throw DomainError(to_string(v) + " is not the double of a matching path");
  }
  return ArcClass{v, std::nullopt};
}

ArcClass standard_arc(std::int64_t index) {
  return arc_from_word(BraidWord::pure({2}).pow(-index));
}

std::optional<std::int64_t> standard_index(const ArcClass& arc) {
  // gamma_i = (1, -2i) for i >= 0 and (-1, -2 - 2i) for i < 0.
  const LaminationCoords& v = arc.double_curve;
  if (v.b > 0 || boost::multiprecision::bit_test(abs_value(v.b), 0)) return std::nullopt;
  if (!fits_int64(v.b)) return std::nullopt;
  const auto b = static_cast<std::int64_t>(v.b);
  if (v.a == 1) return -b / 2;
  if (v.a == -1) return b / 2 - 1;
  return std::nullopt;
}

bool arcs_equal(const ArcClass& lhs, const ArcClass& rhs) {
  return lhs.double_curve == rhs.double_curve;
}

BigInt interior_intersection(const ArcClass& lhs, const ArcClass& rhs) {
  if (arcs_equal(lhs, rhs)) {
    throw IsotopicArcs("arcs " + to_string(lhs.double_curve) +
                       " are isotopic; the interior count needs minimal position");
  }
  const BigInt doubled = intersect_closed(lhs.double_curve, rhs.double_curve);
  if (doubled < 4 || doubled % 4 != 0) {
    throw InvariantViolation("doubled intersection " + doubled.str() +
                             " is not of the form 4 + 4I");
  }
  return (doubled - 4) / 4;
}

namespace {

LaminationCoords pure_power_image(Letter letter, const BigInt& count,
                                  const LaminationCoords& v) {
  LaminationCoords out = v;
  const BigInt twice = 2 * count;
  switch (letter) {
    case 1: rules::apply_power(1, twice, out.a, out.b); break;
    case -1: rules::apply_power(-1, twice, out.a, out.b); break;
    case 2: rules::apply_power(2, twice, out.a, out.b); break;
    case -2: rules::apply_power(-2, twice, out.a, out.b); break;
    case 3:
    case -3:
      // R3^m = s2^-1 s1^2m s2
      rules::apply_power(2, BigInt(1), out.a, out.b);
      rules::apply_power(letter > 0 ? 1 : -1, twice, out.a, out.b);
      rules::apply_power(-2, BigInt(1), out.a, out.b);
      break;
    default: break;
  }
  return out;
}

}  // namespace

Relaxation relax(const LaminationCoords& v) {
  if (v.empty() || multiplicity(v) != 1) {
    throw NotRecognized(to_string(v) + " is not a single curve");
  }
  static const std::vector<Letter> kPureTwists{1, -1, 2, -2, 3, -3};
  LaminationCoords curve = v;
  std::vector<Move> moves;
  while (norm(curve) > 1) {
    const auto move = best_reducing_move(curve, kPureTwists, pure_power_image);
    if (!move) {
      throw NotRecognized("descent stalled at " + to_string(curve));
    }
    curve = pure_power_image(move->letter, move->count, curve);
    moves.push_back(*move);
  }
  // gamma_{-1} = R2 gamma_0 is the only other norm-one curve in the orbit.
  if (curve == LaminationCoords{-1, 0}) {
    curve = pure_power_image(-2, 1, curve);
    moves.push_back({-2, 1});
  }
  if (curve != base_curve_coords()) {
    throw NotRecognized("descent stalled at " + to_string(curve) +
                        ", which is not in the orbit of gamma0");
  }
  // base = u_k ... u_1 v, so v = u_1^-1 ... u_k^-1 base.
  std::vector<Letter> letters;
  for (const Move& move : moves) {
    const auto count = static_cast<std::int64_t>(move.count);
    for (std::int64_t i = 0; i < count; ++i) letters.push_back(-move.letter);
  }
  Relaxation out{BraidWord(Alphabet::Pure, std::move(letters)), "gamma0"};
  if (act(out.word, base_curve_coords()) != v) {
    throw InvariantViolation("relaxation word does not reproduce " + to_string(v));
  }
  return out;
}

BraidWord witness_of(const ArcClass& arc) {
  if (arc.witness) return *arc.witness;
  return relax(arc.double_curve).word;
}

BraidWord twist_word(const ArcClass& arc) {
  const BraidWord w = witness_of(arc);
  return (w * BraidWord::pure({3}) * w.inverse()).reduced();
}

}  // namespace pbr3
