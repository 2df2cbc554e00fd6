#pragma once

#include <cstdint>
#include <vector>

#include "pbr3/lamination.hpp"
#include "pbr3/word.hpp"

namespace pbr3 {

// Freely reduced R-words of length <= radius, shortest first and
// lexicographic within a length (R1 < R1^-1 < R2 < R2^-1 < R3 < R3^-1).
std::vector<BraidWord> reduced_words(int radius);

struct OrbitEntry {
  ArcClass arc;       // witness = first word reaching it, times the base word
  BraidWord word;     // the enumerated word
};

struct OrbitCensus {
  BraidWord base;
  int radius = 0;
  std::int64_t words = 0;  // words enumerated, before deduplication
  std::vector<OrbitEntry> arcs;
};

constexpr int default_orbit_bound = 5;

// Images of base * gamma_0 under all reduced words of length <= radius,
// deduplicated by coordinates in enumeration order. BoundExceeded when
// radius is negative or above `bound`.
OrbitCensus orbit_census(const BraidWord& base, int radius, int bound = default_orbit_bound);

}  // namespace pbr3
