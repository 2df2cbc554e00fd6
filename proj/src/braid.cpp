#include "pbr3/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "pbr3/errors.hpp"

namespace pbr3 {

namespace {

constexpr Letter kR1 = 1;
constexpr Letter kR2 = 2;
constexpr Letter kR3 = 3;

int letter_rank(Letter letter) {
  return 2 * (std::abs(letter) - 1) + (letter < 0 ? 1 : 0);
}

bool lex_less(const std::vector<Letter>& lhs, const std::vector<Letter>& rhs) {
  return std::lexicographical_compare(
      lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
      [](Letter a, Letter b) { return letter_rank(a) < letter_rank(b); });
}

std::vector<Letter> repeat(std::initializer_list<Letter> unit, std::size_t times) {
  std::vector<Letter> out;
  for (std::size_t k = 0; k < times; ++k) out.insert(out.end(), unit);
  return out;
}

}  // namespace

CentralDecomposition decompose(const BraidWord& word) {
  const BraidWord pure = as_pure(word);
  std::vector<Letter> letters;
  letters.reserve(pure.size() * 2);
  std::int64_t center = 0;
  for (Letter letter : pure.letters()) {
    if (letter == kR1) {
      letters.push_back(-kR3);
      letters.push_back(-kR2);
      ++center;
    } else if (letter == -kR1) {
      letters.push_back(kR2);
      letters.push_back(kR3);
      --center;
    } else {
      letters.push_back(letter);
    }
  }
  return {BraidWord(Alphabet::Pure, std::move(letters)).reduced(), center};
}

BraidWord reassemble(const CentralDecomposition& decomposition) {
  return decomposition.f2 *
         BraidWord::pure({kR1, kR2, kR3}).pow(decomposition.center);
}

bool same_element(const BraidWord& lhs, const BraidWord& rhs) {
  return decompose(lhs) == decompose(rhs);
}

LinkingVector linking_vector(const BraidWord& word) {
  LinkingVector lk;
  if (word.alphabet() == Alphabet::Pure) {
    for (Letter letter : word.letters()) {
      const std::int64_t sign = letter < 0 ? -1 : 1;
      switch (std::abs(letter)) {
        case 1: lk.lk12 += sign; break;
        case 2: lk.lk23 += sign; break;
        default: lk.lk13 += sign; break;
      }
    }
    return lk;
  }

  // Each crossing contributes half a twist to the pair of strands involved.
  int position[3] = {1, 2, 3};
  std::int64_t crossings[3] = {0, 0, 0};  // pairs 12, 13, 23
  for (Letter letter : word.letters()) {
    const int i = std::abs(letter) - 1;
    const int lo = std::min(position[i], position[i + 1]);
    const int hi = std::max(position[i], position[i + 1]);
    const int pair = lo == 1 ? (hi == 2 ? 0 : 1) : 2;
    crossings[pair] += letter < 0 ? -1 : 1;
    std::swap(position[i], position[i + 1]);
  }
  if (position[0] != 1 || position[1] != 2 || position[2] != 3) {
    throw NotPure("linking numbers need a pure braid, got " + word.str());
  }
  return {crossings[0] / 2, crossings[1] / 2, crossings[2] / 2};
}

bool in_pbr3c(const BraidWord& word) {
  const LinkingVector lk = linking_vector(word);
  return lk.lk12 == 0 && lk.lk23 == 0;
}

std::string TorelliWord::str() const {
  if (letters.empty()) return "id";
  std::ostringstream out;
  bool first = true;
  for (const TorelliLetter& letter : letters) {
    if (!first) out << ' ';
    first = false;
    out << 't' << letter.index;
    if (letter.exponent != 1) out << '^' << letter.exponent;
  }
  return out.str();
}

TorelliWord normalize(const TorelliWord& word) {
  TorelliWord out;
  for (const TorelliLetter& letter : word.letters) {
    if (letter.exponent == 0) continue;
    if (!out.letters.empty() && out.letters.back().index == letter.index) {
      out.letters.back().exponent += letter.exponent;
      if (out.letters.back().exponent == 0) out.letters.pop_back();
    } else {
      out.letters.push_back(letter);
    }
  }
  return out;
}

BraidWord expand(const TorelliWord& word) {
  BraidWord out;
  const BraidWord r2 = BraidWord::pure({kR2});
  const BraidWord r3 = BraidWord::pure({kR3});
  for (const TorelliLetter& letter : word.letters) {
    out = out * r2.pow(-letter.index) * r3.pow(letter.exponent) * r2.pow(letter.index);
  }
  return out.reduced();
}

TorelliWord rewrite_in_t(const BraidWord& word) {
  const LinkingVector lk = linking_vector(word);
  const CentralDecomposition decomposition = decompose(word);
  if (lk.lk12 != 0 || lk.lk23 != 0 || decomposition.center != 0) {
    std::ostringstream message;
    message << word.str() << " is not in PBr3^c: lk = (" << lk.lk12 << ", "
            << lk.lk13 << ", " << lk.lk23 << "), center = "
            << decomposition.center;
    throw NotInSubgroup(message.str());
  }

  // Schreier scan over the Z<R2>-cover: an R3 letter read after a running
  // R2-exponent p is the generator t_{-p}.
  TorelliWord out;
  std::int64_t running = 0;
  for (Letter letter : decomposition.f2.letters()) {
    if (std::abs(letter) == kR2) {
      running += letter > 0 ? 1 : -1;
    } else {
      out.letters.push_back({-running, letter > 0 ? 1 : -1});
    }
  }
  if (running != 0) {
    throw InvariantViolation("R2 exponent sum nonzero after membership check");
  }
  return normalize(out);
}

CyclicForm cyclic_normal_form(const BraidWord& freely_reduced) {
  const std::vector<Letter>& letters = freely_reduced.letters();
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo] == -letters[hi - 1]) {
    ++lo;
    --hi;
  }
  const std::vector<Letter> core(letters.begin() + static_cast<std::ptrdiff_t>(lo),
                                 letters.begin() + static_cast<std::ptrdiff_t>(hi));
  std::vector<Letter> best = core;
  std::size_t best_shift = 0;
  for (std::size_t shift = 1; shift < core.size(); ++shift) {
    std::vector<Letter> rotated(core.begin() + static_cast<std::ptrdiff_t>(shift),
                                core.end());
    rotated.insert(rotated.end(), core.begin(),
                   core.begin() + static_cast<std::ptrdiff_t>(shift));
    if (lex_less(rotated, best)) {
      best = std::move(rotated);
      best_shift = shift;
    }
  }
  // core = x (y x) x^-1 where x is the rotated-away prefix.
  std::vector<Letter> conjugator(letters.begin(),
                                 letters.begin() + static_cast<std::ptrdiff_t>(lo));
  conjugator.insert(conjugator.end(), core.begin(),
                    core.begin() + static_cast<std::ptrdiff_t>(best_shift));
  return {BraidWord(freely_reduced.alphabet(), std::move(best)),
          BraidWord(freely_reduced.alphabet(), std::move(conjugator)).reduced()};
}

BraidWord cyclic_reduce(const BraidWord& freely_reduced) {
  return cyclic_normal_form(freely_reduced).core;
}

std::string to_string(PairClass pair) {
  switch (pair) {
    case PairClass::R2: return "R2";
    case PairClass::R3: return "R3";
    default: return "R2R3";
  }
}

BraidWord pair_class_word(PairClass pair) {
  switch (pair) {
    case PairClass::R2: return BraidWord::pure({kR2});
    case PairClass::R3: return BraidWord::pure({kR3});
    default: return BraidWord::pure({kR2, kR3});
  }
}

NTType nt_classify(const BraidWord& word) {
  const CentralDecomposition decomposition = decompose(word);
  if (decomposition.f2.empty()) return Periodic{decomposition.center};

  const CyclicForm form = cyclic_normal_form(decomposition.f2);
  const std::vector<Letter>& core = form.core.letters();
  const std::size_t n = core.size();

  struct Candidate {
    PairClass pair;
    std::vector<Letter> letters;
    std::int64_t power;
    std::vector<Letter> adjust;  // core = adjust * pair^power * adjust^-1
  };
  const auto m = static_cast<std::int64_t>(n);
  std::vector<Candidate> candidates{
      {PairClass::R2, repeat({kR2}, n), m, {}},
      {PairClass::R2, repeat({-kR2}, n), -m, {}},
      {PairClass::R3, repeat({kR3}, n), m, {}},
      {PairClass::R3, repeat({-kR3}, n), -m, {}},
  };
  if (n % 2 == 0) {
    const std::size_t half = n / 2;
    const auto h = static_cast<std::int64_t>(half);
    candidates.push_back({PairClass::R2R3, repeat({kR2, kR3}, half), h, {}});
    candidates.push_back({PairClass::R2R3, repeat({kR3, kR2}, half), h, {-kR2}});
    candidates.push_back({PairClass::R2R3, repeat({-kR3, -kR2}, half), -h, {}});
    candidates.push_back({PairClass::R2R3, repeat({-kR2, -kR3}, half), -h, {kR3}});
  }

  for (const Candidate& candidate : candidates) {
    if (candidate.letters != core) continue;
    Reducible result;
    result.pair = candidate.pair;
    result.power = candidate.power;
    result.conjugator =
        (form.conjugator * BraidWord(Alphabet::Pure, candidate.adjust)).reduced();
    result.center = decomposition.center;
    const BraidWord rebuilt = (result.conjugator *
                               pair_class_word(result.pair).pow(result.power) *
                               result.conjugator.inverse())
                                  .reduced();
    if (rebuilt != decomposition.f2) {
      throw InvariantViolation("reducible conjugator does not reproduce " +
                               decomposition.f2.str());
    }
    return result;
  }
  return PseudoAnosov{decomposition.center};
}

std::string nt_name(const NTType& type) {
  if (std::holds_alternative<Periodic>(type)) return "periodic";
  if (std::holds_alternative<Reducible>(type)) return "reducible";
  return "pseudo-anosov";
}

}  // namespace pbr3
