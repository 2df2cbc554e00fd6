#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pbr3/bigint.hpp"
#include "pbr3/word.hpp"

namespace pbr3 {

// Integral lamination of the disc with punctures -1, 0, +1 (k parallel
// copies of one essential curve) in Dynnikov-style coordinates; the zero
// vector is the empty lamination. See sigma_rules.hpp for the definition.
struct LaminationCoords {
  BigInt a;
  BigInt b;

  bool empty() const { return a == 0 && b == 0; }
  friend bool operator==(const LaminationCoords&, const LaminationCoords&) = default;
};

std::string to_string(const LaminationCoords& v);

// l1 norm |a| + |b|; equals the larger of the two intersection numbers with
// the arcs from the outer punctures to the boundary.
BigInt norm(const LaminationCoords& v);

// Number of parallel components (gcd of the coordinates).
BigInt multiplicity(const LaminationCoords& v);

// The boundary of a neighbourhood of gamma_0, the arc from -1 to +1 passing
// below 0.
LaminationCoords base_curve_coords();

// Runs of half twists in application order (rightmost letter first).
struct CompiledWord {
  struct Run {
    Letter letter;
    BigInt count;
  };
  std::vector<Run> runs;
};

CompiledWord compile(const BraidWord& word);

LaminationCoords act(const CompiledWord& word, LaminationCoords v);
LaminationCoords act(const BraidWord& word, const LaminationCoords& v);

// Minimal geometric intersection number of two multicurves. The first
// argument is relaxed to the curve around {-1, 0} by norm-reducing half
// twists; the count is then read off the second one's coordinates.
BigInt intersect_closed(const LaminationCoords& lhs, const LaminationCoords& rhs);

// An arc between -1 and +1 avoiding 0, stored through its doubled curve.
struct ArcClass {
  LaminationCoords double_curve;
  std::optional<BraidWord> witness;  // R-word with double = act(witness, v0)
};

// True iff v is the double of some matching path: a single curve separating
// {-1, +1} from 0.
bool is_arc_double(const LaminationCoords& v);

ArcClass arc_from_word(const BraidWord& word);
// Validates is_arc_double; the witness is left empty.
ArcClass arc_from_coords(const LaminationCoords& v);
// gamma_i = R2^-i gamma_0.
ArcClass standard_arc(std::int64_t index);
// Index i with arc == gamma_i, if any.
std::optional<std::int64_t> standard_index(const ArcClass& arc);

bool arcs_equal(const ArcClass& lhs, const ArcClass& rhs);

// I(a, b) = (i(c_a, c_b) - 4) / 4. Throws IsotopicArcs for equal arcs.
BigInt interior_intersection(const ArcClass& lhs, const ArcClass& rhs);

struct Relaxation {
  BraidWord word;    // act(word, base_curve_coords()) == input
  std::string base;  // "gamma0"
};

// Untangles a curve in the PBr3-orbit of c_{gamma_0} by greedy
// norm-reducing R-moves. NotRecognized when the descent stalls elsewhere.
Relaxation relax(const LaminationCoords& v);

// Witness word of the arc, recovering it with relax() when absent.
BraidWord witness_of(const ArcClass& arc);

// Full right-handed twist along the arc: w R3 w^-1 for a witness w.
BraidWord twist_word(const ArcClass& arc);

}  // namespace pbr3
