#include "autxy/word.hpp"

#include <stdexcept>

#include "autxy/decompose.hpp"

namespace autxy {

GroupOracles affine_triangular_oracles() {
  GroupOracles o;
  o.in_a = [](const Auto& g) { return as_affine(g).has_value(); };
  o.in_b = [](const Auto& g) { return as_triangular(g).has_value(); };
  o.intersect_factor = [](const Letter& l) -> std::pair<Auto, Auto> {
    int p = l.value.p();
    RingTag tag = l.value.tag();
    if (l.tag == LetterTag::B) {
      TriangularSplit s = triangular_in_AI(l.value, PStableSet::all_ge2(p));
      return {*s.shear_part, *s.affine_part};
    }
    auto aff = as_affine(l.value);
    if (!aff) throw std::domain_error("A-letter is not affine");
    if (aff->m[1][0].is_zero())  // already triangular-affine
      return {Auto::identity(p, tag), l.value};
    // canonical representative with matrix ((0,1),(1,d/c)) and no shift
    AffineForm rep{{{RatFunc::zero(p), RatFunc::one(p)},
                    {RatFunc::one(p), aff->m[1][1] / aff->m[1][0]}},
                   {RatFunc::zero(p), RatFunc::zero(p)}};
    Auto rho = make_affine(p, tag, rep);
    Auto eta = invert(rho) * l.value;
    return {rho, eta};
  };
  return o;
}

Auto word_eval(const Word& w, int p, RingTag tag) {
  if (w.empty()) return Auto::identity(p, tag);
  Auto acc = w.letters.front().value;
  for (std::size_t i = 1; i < w.size(); ++i) acc = acc * w.letters[i].value;
  return acc;
}

namespace {

bool letter_ok(const Letter& l, const GroupOracles& o) {
  bool a = o.in_a(l.value), b = o.in_b(l.value);
  if (a && b) return false;
  return l.tag == LetterTag::A ? a : b;
}

}  // namespace

bool is_reduced(const Word& w, const GroupOracles& o) {
  for (const auto& l : w.letters)
    if (!letter_ok(l, o)) return false;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (o.in_union(w.letters[i].value * w.letters[i + 1].value)) return false;
  return true;
}

namespace {

LetterTag tag_for(const Auto& g, const GroupOracles& o, LetterTag preferred) {
  bool a = o.in_a(g), b = o.in_b(g);
  if (a && b) return preferred;
  if (a) return LetterTag::A;
  if (b) return LetterTag::B;
  throw std::logic_error("merged letter left both subgroups");
}

}  // namespace

Word star(const Word& a, const Word& b, const GroupOracles& o) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  Auto delta = a.tail().value * b.head().value;
  Word r;
  if (!o.in_union(delta)) {
    r.letters = a.letters;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
  }
  r.letters.assign(a.letters.begin(), a.letters.end() - 1);
  r.letters.push_back(Letter{tag_for(delta, o, a.tail().tag), delta});
  r.letters.insert(r.letters.end(), b.letters.begin() + 1, b.letters.end());
  return r;
}

Word normalize_word(const Word& w, const GroupOracles& o) {
  std::vector<Letter> ls = w.letters;
  bool changed = true;
  while (changed) {
    changed = false;
    // drop identity letters
    for (std::size_t i = 0; i < ls.size();) {
      if (ls.size() > 1 && ls[i].value.is_identity()) {
        ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
      } else {
        ++i;
      }
    }
    // merge adjacent letters whose product stays in one factor
    for (std::size_t i = 0; i + 1 < ls.size();) {
      Auto prod = ls[i].value * ls[i + 1].value;
      if (o.in_union(prod)) {
        Letter merged{tag_for(prod, o, ls[i].tag), prod};
        ls[i] = merged;
        ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        changed = true;
      } else {
        ++i;
      }
    }
    // push intersection letters into a neighbor
    for (std::size_t i = 0; i < ls.size(); ++i) {
      if (ls.size() < 2 || !o.in_ab(ls[i].value)) continue;
      if (i + 1 < ls.size()) {
        Auto prod = ls[i].value * ls[i + 1].value;
        ls[i + 1] = Letter{tag_for(prod, o, ls[i + 1].tag), prod};
        ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        Auto prod = ls[i - 1].value * ls[i].value;
        ls[i - 1] = Letter{tag_for(prod, o, ls[i - 1].tag), prod};
        ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(i));
      }
      changed = true;
      break;
    }
  }
  if (ls.size() == 1 && ls[0].value.is_identity()) ls.clear();
  // retag letters that sit in exactly one factor
  for (auto& l : ls) l.tag = tag_for(l.value, o, l.tag);
  return Word{ls};
}

std::optional<std::vector<Auto>> equivalent(const Word& a, const Word& b,
                                            const GroupOracles& o) {
  if (a.size() != b.size()) return std::nullopt;
  if (a.empty()) return std::vector<Auto>{};
  std::size_t l = a.size();
  if (l == 1) {
    if (a.letters[0].value == b.letters[0].value) return std::vector<Auto>{};
    return std::nullopt;
  }
  std::vector<Auto> etas;
  // beta_1 = alpha_1 eta_1
  Auto eta = invert(a.letters[0].value) * b.letters[0].value;
  if (!o.in_ab(eta)) return std::nullopt;
  etas.push_back(eta);
  for (std::size_t i = 1; i + 1 < l; ++i) {
    // beta_i = eta_{i-1}^{-1} alpha_i eta_i
    eta = invert(a.letters[i].value) * etas.back() * b.letters[i].value;
    if (!o.in_ab(eta)) return std::nullopt;
    etas.push_back(eta);
  }
  // beta_l must equal eta_{l-1}^{-1} alpha_l
  Auto expect = invert(etas.back()) * a.letters[l - 1].value;
  if (expect != b.letters[l - 1].value) return std::nullopt;
  return etas;
}

namespace {

// theta in BA_2(R) * (B cap H): every shear exponent outside I union {0,1}
// must carry a coefficient divisible by the x-unit inside R.
bool left_coset_ok(const TriangularForm& tf, const PStableSet& I,
                   std::string* why) {
  for (const auto& [j, c] : tf.shear) {
    if (j <= 1 || I.contains(j)) continue;
    if (!(c / tf.u).is_integral()) {
      if (why)
        *why = "shear exponent " + std::to_string(j) +
               " has coefficient outside u*R";
      return false;
    }
  }
  return true;
}

void require_stable(const PStableSet& I) {
  if (!is_p_stable(I).stable)
    throw std::domain_error("exponent set is not p-stable");
}

}  // namespace

std::vector<LetterVerdict> criterion_letters(const Word& w, const GroupOracles&,
                                             const PStableSet& I) {
  require_stable(I);
  std::vector<std::size_t> b_positions;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w.letters[i].tag == LetterTag::B) b_positions.push_back(i);
  std::vector<LetterVerdict> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Letter& l = w.letters[i];
    LetterVerdict v;
    v.index = i;
    v.tag = l.tag;
    if (l.tag == LetterTag::A) {
      v.pass = true;
      v.detail = "affine letter, contained in the subgroup";
      out.push_back(v);
      continue;
    }
    bool first_b = b_positions.front() == i;
    bool last_b = b_positions.back() == i;
    v.position = first_b ? LetterPosition::Head
                         : (last_b ? LetterPosition::Tail : LetterPosition::Interior);
    auto tf = as_triangular(l.value);
    if (!tf) throw std::domain_error("B-letter is not triangular");
    v.pass = true;
    std::string why;
    if (first_b && !left_coset_ok(*tf, I, &why)) {
      v.pass = false;
      v.detail = "head coset: " + why;
    }
    if (v.pass && last_b) {
      auto inv_tf = as_triangular(invert(l.value));
      if (!inv_tf) throw std::logic_error("triangular inverse lost its shape");
      if (!left_coset_ok(*inv_tf, I, &why)) {
        v.pass = false;
        v.detail = "tail coset: " + why;
      }
    }
    if (v.pass && !first_b && !last_b) {
      v.detail = "interior double coset imposes no constraint over K";
    } else if (v.pass) {
      v.detail = "coset condition holds";
    }
    out.push_back(v);
  }
  return out;
}

bool length3_membership(const Auto& h, const GroupOracles&, const PStableSet& I) {
  require_stable(I);
  DecomposeResult d = decompose(h);
  if (d.status != DecomposeStatus::Ok)
    throw std::domain_error("not an automorphism");
  const Word& w = d.word;
  if (w.size() != 3 || w.letters[0].tag != LetterTag::B ||
      w.letters[1].tag != LetterTag::A || w.letters[2].tag != LetterTag::B)
    throw std::domain_error("length-3 B A B element required");
  auto head = as_triangular(w.letters[0].value);
  auto tail = as_triangular(invert(w.letters[2].value));
  if (!head || !tail) throw std::logic_error("B-letter is not triangular");
  return left_coset_ok(*head, I, nullptr) && left_coset_ok(*tail, I, nullptr);
}

Word assemble_ht_word(const std::vector<HTLetter>& letters, const GroupOracles& o) {
  if (letters.empty()) throw std::invalid_argument("empty word");
  for (std::size_t i = 0; i + 1 < letters.size(); ++i)
    if (letters[i].in_h == letters[i + 1].in_h)
      throw std::invalid_argument("letters must alternate between the subgroups");

  std::vector<Auto> vals;
  for (const auto& l : letters) vals.push_back(l.value);

  auto decompose_all = [](const std::vector<Auto>& vs) {
    std::vector<Word> ws;
    for (const auto& v : vs) {
      DecomposeResult d = decompose(v);
      if (d.status != DecomposeStatus::Ok)
        throw std::domain_error("letter is not an automorphism");
      ws.push_back(d.word);
    }
    return ws;
  };

  std::vector<Word> words = decompose_all(vals);
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i + 1 < vals.size(); ++i) {
      if (words[i].empty() || words[i + 1].empty()) continue;
      Auto delta = words[i].tail().value * words[i + 1].head().value;
      if (!o.in_ab(delta)) continue;
      // shift the head factor of the right letter across the boundary
      Auto eta = words[i + 1].head().value;
      vals[i] = vals[i] * eta;
      vals[i + 1] = invert(eta) * vals[i + 1];
      words = decompose_all(vals);
      moved = true;
      break;
    }
    // drop letters that fell into the identity, merging same-side neighbors
    for (std::size_t i = 0; i < vals.size();) {
      if (vals.size() > 1 && vals[i].is_identity()) {
        vals.erase(vals.begin() + static_cast<std::ptrdiff_t>(i));
        words.erase(words.begin() + static_cast<std::ptrdiff_t>(i));
        moved = true;
      } else {
        ++i;
      }
    }
  }
  Word acc = words.front();
  for (std::size_t i = 1; i < words.size(); ++i) acc = star(acc, words[i], o);
  return acc;
}

}  // namespace autxy
