#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace pbr3 {

// Pure: the pure-braid generators R1, R2, R3.
// Artin: the half twists s1 (points -1, 0) and s2 (points 0, +1).
enum class Alphabet { Pure, Artin };

// +g is generator g, -g is its inverse.
using Letter = int;

class BraidWord {
 public:
  BraidWord() = default;
  BraidWord(Alphabet alphabet, std::vector<Letter> letters);

  static BraidWord pure(std::initializer_list<Letter> letters) {
    return BraidWord(Alphabet::Pure, letters);
  }
  static BraidWord artin(std::initializer_list<Letter> letters) {
    return BraidWord(Alphabet::Artin, letters);
  }

  Alphabet alphabet() const noexcept { return alphabet_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  std::size_t size() const noexcept { return letters_.size(); }

  BraidWord inverse() const;
  // Cancels adjacent x x^-1 pairs until none remain.
  BraidWord reduced() const;
  BraidWord pow(std::int64_t n) const;

  // Run-length form, e.g. "R2^-3 R3 R2^3"; the empty word prints as "id".
  std::string str() const;

  friend BraidWord operator*(const BraidWord& lhs, const BraidWord& rhs);
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  Alphabet alphabet_ = Alphabet::Pure;
  std::vector<Letter> letters_;
};

int generator_count(Alphabet alphabet) noexcept;

// Grammar: whitespace separated tokens R1 R2 R3 s1 s2 (or "id"), each with
// an optional ^<int> power. Throws ParseError with the byte offset of the
// offending token.
BraidWord parse_word(std::string_view text, Alphabet alphabet);
// Same grammar; the alphabet is taken from the first generator token.
BraidWord parse_word(std::string_view text);

// R2 = s2^2, R3 = s2^-1 s1^2 s2, R1 = D (R2 R3)^-1 with D = (s1 s2)^3,
// followed by free reduction.
BraidWord to_artin(const BraidWord& word);

// Reidemeister-Schreier rewriting of a pure Artin word into R-letters,
// freely reduced. Throws NotPure if the strand permutation is nontrivial.
BraidWord from_artin(const BraidWord& word);

// Identity on R-words, from_artin on Artin words.
BraidWord as_pure(const BraidWord& word);

// Permutation of the three strands (position -> strand label, 1-based).
std::vector<int> strand_permutation(const BraidWord& word);

}  // namespace pbr3
