#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "autxy/pstable.hpp"

namespace autxy {

enum class LetterTag { A, B };

struct Letter {
  LetterTag tag;
  Auto value;
};

// Product of letters in juxtaposition order: w evaluates to
// letters[0] * letters[1] * ... * letters[n-1].
struct Word {
  std::vector<Letter> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  const Letter& head() const { return letters.front(); }
  const Letter& tail() const { return letters.back(); }
};

// Membership predicates for an amalgamated pair (A, B) inside a common
// group, plus the factorization of a letter into (coset part, A∩B part).
struct GroupOracles {
  std::function<bool(const Auto&)> in_a;
  std::function<bool(const Auto&)> in_b;
  std::function<std::pair<Auto, Auto>(const Letter&)> intersect_factor;

  bool in_ab(const Auto& g) const { return in_a(g) && in_b(g); }
  bool in_union(const Auto& g) const { return in_a(g) || in_b(g); }
};

// The shipped instantiation: A = Aff_2(K), B = BA_2(K).
GroupOracles affine_triangular_oracles();

Auto word_eval(const Word& w, int p, RingTag tag = RingTag::K);

// Letters outside A∩B, each in the group named by its tag, and no adjacent
// product falling back into A or B.
bool is_reduced(const Word& w, const GroupOracles& o);

// Concatenation that merges the boundary letters when their product stays
// in A or B.  The result evaluates to word_eval(a) * word_eval(b).
Word star(const Word& a, const Word& b, const GroupOracles& o);

// Merge adjacent letters whose product stays in one factor and absorb any
// A∩B letters into a neighbor; evaluation is preserved.
Word normalize_word(const Word& w, const GroupOracles& o);

// Conjugating sequence eta_1, ..., eta_{l-1} in A∩B linking two reduced
// words of the same element letter by letter, or nullopt if the words are
// inequivalent.
std::optional<std::vector<Auto>> equivalent(const Word& a, const Word& b,
                                            const GroupOracles& o);

enum class LetterPosition { Head, Interior, Tail };

struct LetterVerdict {
  std::size_t index = 0;
  LetterTag tag = LetterTag::A;
  LetterPosition position = LetterPosition::Interior;
  bool pass = true;
  std::string detail;
};

// Necessary double-coset conditions on the letters of a reduced word for
// membership in the subgroup generated by the tame part and the triangular
// subgroup with shear support I (B-letters against BA_2(R); A-letters pass
// since Aff_2(R) sits inside every such subgroup).
std::vector<LetterVerdict> criterion_letters(const Word& w, const GroupOracles& o,
                                             const PStableSet& I);

// Exact membership test for elements of length 3 in B A B position: h lies
// in the subgroup iff both outer letters strip to BA_2(R) times a shear
// supported on I.  Throws if h does not have the required shape.
bool length3_membership(const Auto& h, const GroupOracles& o, const PStableSet& I);

// Letter of a two-subgroup word: the flag says which subgroup it came from.
struct HTLetter {
  bool in_h = false;
  Auto value;
};

// Assembles the concatenated decompositions of an alternating word over two
// subgroups into a single reduced word, shifting common-subgroup factors
// across boundaries when a concatenation degenerates.
Word assemble_ht_word(const std::vector<HTLetter>& letters, const GroupOracles& o);

}  // namespace autxy
