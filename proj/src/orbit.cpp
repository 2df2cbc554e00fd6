#include "pbr3/orbit.hpp"

#include <map>
#include <string>
#include <utility>

#include "pbr3/errors.hpp"

namespace pbr3 {

std::vector<BraidWord> reduced_words(int radius) {
  static constexpr Letter order[] = {1, -1, 2, -2, 3, -3};
  std::vector<std::vector<Letter>> level{{}};
  std::vector<BraidWord> out{BraidWord()};
  for (int length = 1; length <= radius; ++length) {
    std::vector<std::vector<Letter>> next;
    for (const auto& prefix : level) {
      for (Letter letter : order) {
        if (!prefix.empty() && prefix.back() == -letter) continue;
        auto word = prefix;
        word.push_back(letter);
        out.emplace_back(Alphabet::Pure, word);
        next.push_back(std::move(word));
      }
    }
    level = std::move(next);
  }
  return out;
}

OrbitCensus orbit_census(const BraidWord& base, int radius, int bound) {
  if (radius < 0 || radius > bound) {
    throw BoundExceeded("radius " + std::to_string(radius) + " outside [0, " +
                        std::to_string(bound) + "]");
  }
  OrbitCensus census;
  census.base = as_pure(base);
  census.radius = radius;
  const LaminationCoords start = act(census.base, base_curve_coords());
  std::map<std::pair<BigInt, BigInt>, std::size_t> seen;
  for (const BraidWord& word : reduced_words(radius)) {
    census.words += 1;
    LaminationCoords image = act(word, start);
    auto key = std::make_pair(image.a, image.b);
    if (seen.contains(key)) continue;
    seen.emplace(std::move(key), census.arcs.size());
    census.arcs.push_back({ArcClass{std::move(image), (word * census.base).reduced()}, word});
  }
  return census;
}

}  // namespace pbr3
