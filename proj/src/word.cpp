#include "pbr3/word.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <utility>

#include "pbr3/errors.hpp"

namespace pbr3 {

namespace {

constexpr std::int64_t kMaxPower = 1'000'000;

bool letter_valid(Alphabet alphabet, Letter letter) {
  const int g = std::abs(letter);
  return g >= 1 && g <= generator_count(alphabet);
}

void push_reduced(std::vector<Letter>& out, Letter letter) {
  if (!out.empty() && out.back() == -letter) {
    out.pop_back();
  } else {
    out.push_back(letter);
  }
}

struct Token {
  Alphabet alphabet;
  Letter generator;  // 0 for "id"
};

bool lookup_generator(std::string_view name, Token& token) {
  static constexpr std::array<std::pair<std::string_view, Token>, 6> kNames{{
      {"R1", {Alphabet::Pure, 1}},
      {"R2", {Alphabet::Pure, 2}},
      {"R3", {Alphabet::Pure, 3}},
      {"s1", {Alphabet::Artin, 1}},
      {"s2", {Alphabet::Artin, 2}},
      {"id", {Alphabet::Pure, 0}},
  }};
  for (const auto& [key, value] : kNames) {
    if (key == name) {
      token = value;
      return true;
    }
  }
  return false;
}

BraidWord parse_impl(std::string_view text, const Alphabet* forced) {
  std::vector<Letter> letters;
  bool have_alphabet = forced != nullptr;
  Alphabet alphabet = forced ? *forced : Alphabet::Pure;

  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < n && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
    Token token{};
    if (i == start || !lookup_generator(text.substr(start, i - start), token)) {
      throw ParseError(start, "invalid generator token");
    }

    std::int64_t power = 1;
    if (i < n && text[i] == '^') {
      ++i;
      const std::size_t num_start = i;
      if (i < n && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      std::string_view digits = text.substr(num_start, i - num_start);
      if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
      const auto [ptr, ec] =
          std::from_chars(digits.data(), digits.data() + digits.size(), power);
      if (ec != std::errc() || ptr != digits.data() + digits.size() ||
          digits.empty()) {
        throw ParseError(num_start, "malformed exponent");
      }
      if (power > kMaxPower || power < -kMaxPower) {
        throw ParseError(num_start, "exponent out of range");
      }
    }
    if (i < n && !std::isspace(static_cast<unsigned char>(text[i]))) {
      throw ParseError(i, "expected whitespace between tokens");
    }

    if (token.generator == 0) continue;
    if (!have_alphabet) {
      alphabet = token.alphabet;
      have_alphabet = true;
    } else if (token.alphabet != alphabet) {
      throw ParseError(start, "generator from the wrong alphabet");
    }
    const Letter letter = power < 0 ? -token.generator : token.generator;
    for (std::int64_t k = 0; k < std::abs(power); ++k) letters.push_back(letter);
  }
  return BraidWord(alphabet, std::move(letters));
}

// Reidemeister-Schreier data for PBr3 inside B3. States index the Schreier
// transversal id, s1, s2, s1 s2, s2 s1, s1 s2 s1 (keyed by the permutation
// they induce); each (state, letter) pair yields the pure braid
// T(state) x T(next)^-1 written in R-letters.
struct SchreierEntry {
  int next;
  std::vector<Letter> pure;
};

// Column order: s1, s1^-1, s2, s2^-1.
const std::array<std::array<SchreierEntry, 4>, 6>& schreier_table() {
  static const std::array<std::array<SchreierEntry, 4>, 6> table{{
      // (1,2,3)
      {{{1, {}}, {1, {-1}}, {2, {}}, {2, {-2}}}},
      // (2,1,3)
      {{{0, {1}}, {0, {}}, {3, {}}, {3, {-3}}}},
      // (1,3,2)
      {{{4, {}}, {4, {-1, -3, 1}}, {0, {2}}, {0, {}}}},
      // (2,3,1)
      {{{5, {}}, {5, {-2}}, {1, {3}}, {1, {}}}},
      // (3,1,2)
      {{{2, {-1, 3, 1}}, {2, {}}, {5, {}}, {5, {-1}}}},
      // (3,2,1)
      {{{3, {2}}, {3, {}}, {4, {1}}, {4, {}}}},
  }};
  return table;
}

int column(Letter letter) {
  switch (letter) {
    case 1: return 0;
    case -1: return 1;
    case 2: return 2;
    default: return 3;
  }
}

}  // namespace

int generator_count(Alphabet alphabet) noexcept {
  return alphabet == Alphabet::Pure ? 3 : 2;
}

BraidWord::BraidWord(Alphabet alphabet, std::vector<Letter> letters)
    : alphabet_(alphabet), letters_(std::move(letters)) {
  for (Letter letter : letters_) {
    if (!letter_valid(alphabet_, letter)) {
      throw DomainError("letter " + std::to_string(letter) +
                        " is not valid for the alphabet");
    }
  }
}

BraidWord BraidWord::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (Letter& letter : out) letter = -letter;
  BraidWord result;
  result.alphabet_ = alphabet_;
  result.letters_ = std::move(out);
  return result;
}

BraidWord BraidWord::reduced() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (Letter letter : letters_) push_reduced(out, letter);
  BraidWord result;
  result.alphabet_ = alphabet_;
  result.letters_ = std::move(out);
  return result;
}

BraidWord BraidWord::pow(std::int64_t n) const {
  const BraidWord base = n < 0 ? inverse() : *this;
  BraidWord result;
  result.alphabet_ = alphabet_;
  for (std::int64_t k = 0; k < std::abs(n); ++k) {
    result.letters_.insert(result.letters_.end(), base.letters_.begin(),
                           base.letters_.end());
  }
  return result;
}

std::string BraidWord::str() const {
  if (letters_.empty()) return "id";
  const char prefix = alphabet_ == Alphabet::Pure ? 'R' : 's';
  std::ostringstream out;
  std::size_t i = 0;
  bool first = true;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    const auto run = static_cast<std::int64_t>(j - i);
    const std::int64_t power = letters_[i] < 0 ? -run : run;
    if (!first) out << ' ';
    first = false;
    out << prefix << std::abs(letters_[i]);
    if (power != 1) out << '^' << power;
    i = j;
  }
  return out.str();
}

BraidWord operator*(const BraidWord& lhs, const BraidWord& rhs) {
  if (lhs.alphabet_ != rhs.alphabet_) {
    if (lhs.empty()) return rhs;
    if (rhs.empty()) return lhs;
    throw DomainError("cannot concatenate words over different alphabets");
  }
  BraidWord result = lhs;
  result.letters_.insert(result.letters_.end(), rhs.letters_.begin(),
                         rhs.letters_.end());
  return result;
}

BraidWord parse_word(std::string_view text, Alphabet alphabet) {
  return parse_impl(text, &alphabet);
}

BraidWord parse_word(std::string_view text) { return parse_impl(text, nullptr); }

BraidWord to_artin(const BraidWord& word) {
  if (word.alphabet() == Alphabet::Artin) return word.reduced();
  static const std::vector<Letter> r2{2, 2};
  static const std::vector<Letter> r3{-2, 1, 1, 2};
  // D (R2 R3)^-1 = (s1 s2)^3 s2^-1 s1^-2 s2 s2^-2
  static const std::vector<Letter> r1{1, 2, 1, 2, 1, 2, -2, -1, -1, 2, -2, -2};

  std::vector<Letter> out;
  auto append = [&out](const std::vector<Letter>& image, bool invert) {
    if (!invert) {
      for (Letter l : image) push_reduced(out, l);
    } else {
      for (auto it = image.rbegin(); it != image.rend(); ++it) push_reduced(out, -*it);
    }
  };
  for (Letter letter : word.letters()) {
    const std::vector<Letter>& image =
        std::abs(letter) == 1 ? r1 : (std::abs(letter) == 2 ? r2 : r3);
    append(image, letter < 0);
  }
  return BraidWord(Alphabet::Artin, std::move(out));
}

BraidWord from_artin(const BraidWord& word) {
  if (word.alphabet() == Alphabet::Pure) return word.reduced();
  const auto& table = schreier_table();
  int state = 0;
  std::vector<Letter> out;
  for (Letter letter : word.letters()) {
    const SchreierEntry& entry = table[state][column(letter)];
    for (Letter l : entry.pure) push_reduced(out, l);
    state = entry.next;
  }
  if (state != 0) {
    throw NotPure("word " + word.str() + " does not induce the identity permutation");
  }
  return BraidWord(Alphabet::Pure, std::move(out));
}

BraidWord as_pure(const BraidWord& word) {
  return word.alphabet() == Alphabet::Pure ? word : from_artin(word);
}

std::vector<int> strand_permutation(const BraidWord& word) {
  std::vector<int> position{1, 2, 3};
  if (word.alphabet() == Alphabet::Pure) return position;
  for (Letter letter : word.letters()) {
    const int i = std::abs(letter) - 1;
    std::swap(position[i], position[i + 1]);
  }
  return position;
}

}  // namespace pbr3
