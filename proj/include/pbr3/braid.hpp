#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "pbr3/word.hpp"

namespace pbr3 {

// PBr3 = F2<R2, R3> x Z<D>, D = R1 R2 R3 the full boundary twist.
struct CentralDecomposition {
  BraidWord f2;  // freely reduced, letters R2^{+-1}, R3^{+-1} only
  std::int64_t center = 0;

  friend bool operator==(const CentralDecomposition&,
                         const CentralDecomposition&) = default;
};

// Substitutes R1 -> (R2 R3)^-1 D, collects D into the counter and freely
// reduces. Artin input must be pure (NotPure otherwise).
CentralDecomposition decompose(const BraidWord& word);

// f2 * (R1 R2 R3)^center as an R-word.
BraidWord reassemble(const CentralDecomposition& decomposition);

// Group equality in PBr3.
bool same_element(const BraidWord& lhs, const BraidWord& rhs);

// Pairwise linking numbers; strand 1 is the point -1, 2 is 0, 3 is +1.
struct LinkingVector {
  std::int64_t lk12 = 0;
  std::int64_t lk13 = 0;
  std::int64_t lk23 = 0;

  LinkingVector& operator+=(const LinkingVector& other) {
    lk12 += other.lk12;
    lk13 += other.lk13;
    lk23 += other.lk23;
    return *this;
  }
  friend LinkingVector operator+(LinkingVector lhs, const LinkingVector& rhs) {
    return lhs += rhs;
  }
  friend bool operator==(const LinkingVector&, const LinkingVector&) = default;
};

LinkingVector linking_vector(const BraidWord& word);

// Membership in the subgroup generated by full twists in matching paths:
// both the winding of -1 about 0 and of +1 about 0 vanish.
bool in_pbr3c(const BraidWord& word);

// t_i = R2^-i R3 R2^i.
struct TorelliLetter {
  std::int64_t index = 0;
  std::int64_t exponent = 0;

  friend bool operator==(const TorelliLetter&, const TorelliLetter&) = default;
};

struct TorelliWord {
  std::vector<TorelliLetter> letters;

  bool empty() const noexcept { return letters.empty(); }
  std::string str() const;
  friend bool operator==(const TorelliWord&, const TorelliWord&) = default;
};

// Merges equal neighbouring indices and drops zero exponents.
TorelliWord normalize(const TorelliWord& word);

// Substitutes t_i and freely reduces.
BraidWord expand(const TorelliWord& word);

// Rewrites a member of PBr3^c in the free basis t_i; NotInSubgroup otherwise.
TorelliWord rewrite_in_t(const BraidWord& word);

// word = conjugator * core * conjugator^-1 with core cyclically reduced and
// the lexicographically least of its rotations.
struct CyclicForm {
  BraidWord core;
  BraidWord conjugator;
};

CyclicForm cyclic_normal_form(const BraidWord& freely_reduced);
BraidWord cyclic_reduce(const BraidWord& freely_reduced);

// Nielsen-Thurston type of the induced map of the four-punctured sphere.
enum class PairClass { R2, R3, R2R3 };

std::string to_string(PairClass pair);

struct Periodic {
  std::int64_t center = 0;
};

struct Reducible {
  PairClass pair = PairClass::R2;
  std::int64_t power = 0;
  BraidWord conjugator;  // f2 = conjugator * pair^power * conjugator^-1
  std::int64_t center = 0;
};

struct PseudoAnosov {
  std::int64_t center = 0;
};

using NTType = std::variant<Periodic, Reducible, PseudoAnosov>;

NTType nt_classify(const BraidWord& word);

std::string nt_name(const NTType& type);

// The pure braid realizing the given pair class (R2, R3 or R2 R3).
BraidWord pair_class_word(PairClass pair);

}  // namespace pbr3
