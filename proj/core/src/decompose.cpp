#include "autxy/decompose.hpp"

#include <stdexcept>
#include <utility>

namespace autxy {

namespace {

// alpha with target == alpha * base, both homogeneous of equal degree
std::optional<RatFunc> proportionality(const BiPoly& target, const BiPoly& base) {
  if (base.is_zero() || target.is_zero()) return std::nullopt;
  auto lead = std::prev(base.terms().end());
  RatFunc tc = target.coeff(lead->first.i, lead->first.j);
  if (tc.is_zero()) return std::nullopt;
  RatFunc alpha = tc / lead->second;
  if (target != base * alpha) return std::nullopt;
  return alpha;
}

DecomposeResult vdk(const Auto& input) {
  int p = input.p();
  Auto g = input.tag() == RingTag::K ? input : input.view_over(RingTag::K);
  BiPoly f1 = g.f1(), f2 = g.f2();
  std::vector<Letter> raw;
  std::vector<ReductionStep> steps;
  DecomposeResult fail;  // NotAutomorphism

  while (true) {
    int d1 = f1.total_degree(), d2 = f2.total_degree();
    if (d1 <= 1 && d2 <= 1) break;
    if (d1 < 1 || d2 < 1) return fail;
    if (d1 >= d2) {
      if (d1 % d2 != 0) return fail;
      int d = d1 / d2;
      auto alpha = proportionality(f1.leading_form(), f2.leading_form().pow(d));
      if (!alpha) return fail;
      f1 = f1 - f2.pow(d) * *alpha;
      Auto beta = make_shear(p, RingTag::K, {{d, *alpha}});
      raw.insert(raw.begin(), Letter{LetterTag::B, beta});
      steps.push_back({Var::X, *alpha, d});
    } else {
      if (d2 % d1 != 0) return fail;
      int d = d2 / d1;
      auto alpha = proportionality(f2.leading_form(), f1.leading_form().pow(d));
      if (!alpha) return fail;
      f2 = f2 - f1.pow(d) * *alpha;
      Auto beta = make_shear(p, RingTag::K, {{d, *alpha}});
      Auto tau = Auto::transposition(p, RingTag::K);
      raw.insert(raw.begin(), {Letter{LetterTag::A, tau}, Letter{LetterTag::B, beta},
                               Letter{LetterTag::A, tau}});
      steps.push_back({Var::Y, *alpha, d});
    }
  }

  Auto phi(f1, f2);
  auto aff = as_affine(phi);
  if (!aff) return fail;
  raw.insert(raw.begin(), Letter{LetterTag::A, phi});

  DecomposeResult res;
  res.status = DecomposeStatus::Ok;
  res.steps = std::move(steps);
  res.word = normalize_word(Word{std::move(raw)}, affine_triangular_oracles());
  return res;
}

}  // namespace

DecomposeResult decompose(const Auto& g) { return vdk(g); }

DecomposeResult decompose_diff_affine(const Auto& g) {
  if (!classify(g).diff_affine)
    throw std::domain_error("differentially affine automorphism required");
  DecomposeResult r = vdk(g);
  if (r.status != DecomposeStatus::Ok)
    throw std::domain_error("not an automorphism");
  int p = g.p();
  for (const auto& s : r.steps)
    if (!(s.d == 1 || (p > 0 && s.d % p == 0)))
      throw std::logic_error("degree ratio escapes p-divisibility");
  return r;
}

DecomposeResult decompose_additive(const Auto& g) {
  if (!classify(g).additive)
    throw std::domain_error("additive automorphism required");
  DecomposeResult r = vdk(g);
  if (r.status != DecomposeStatus::Ok)
    throw std::domain_error("not an automorphism");
  int p = g.p();
  for (const auto& s : r.steps)
    if (!is_p_power(s.d, p))
      throw std::logic_error("degree ratio is not a p-power");
  for (const auto& l : r.word.letters)
    if (!l.value.f1().is_additive() || !l.value.f2().is_additive())
      throw std::logic_error("letter is not additive");
  return r;
}

int amalgam_length(const Auto& g) {
  DecomposeResult r = decompose(g);
  if (r.status != DecomposeStatus::Ok)
    throw std::domain_error("not an automorphism");
  if (r.word.size() == 1 &&
      affine_triangular_oracles().in_ab(r.word.letters[0].value))
    return 0;
  return static_cast<int>(r.word.size());
}

bool is_r_automorphism(const Auto& g) {
  Auto gk = g.tag() == RingTag::K ? g : g.view_over(RingTag::K);
  if (!gk.f1().is_integral() || !gk.f2().is_integral()) return false;
  if (decompose(gk).status != DecomposeStatus::Ok) return false;
  Auto inv = invert(gk);
  return inv.f1().is_integral() && inv.f2().is_integral();
}

Auto invert(const Auto& a) {
  int p = a.p();
  RingTag tag = a.tag();
  Auto ak = tag == RingTag::K ? a : a.view_over(RingTag::K);
  std::optional<Auto> inv;
  if (auto aff = as_affine(ak)) {
    RatFunc det = aff->det();
    AffineForm out{{{aff->m[1][1] / det, -(aff->m[0][1] / det)},
                    {-(aff->m[1][0] / det), aff->m[0][0] / det}},
                   {RatFunc::zero(p), RatFunc::zero(p)}};
    out.b[0] = -(out.m[0][0] * aff->b[0] + out.m[0][1] * aff->b[1]);
    out.b[1] = -(out.m[1][0] * aff->b[0] + out.m[1][1] * aff->b[1]);
    inv = make_affine(p, RingTag::K, out);
  } else if (auto tf = as_triangular(ak)) {
    BiPoly yc = (BiPoly::y(p, RingTag::K) - BiPoly::constant(tf->w, RingTag::K)) *
                tf->v.inverse();
    BiPoly pofy = BiPoly::zero(p, RingTag::K);
    for (const auto& [j, c] : tf->shear) pofy = pofy + yc.pow(j) * c;
    BiPoly f1 = (BiPoly::x(p, RingTag::K) - pofy) * tf->u.inverse();
    inv = Auto(f1, yc);
  } else {
    DecomposeResult r = decompose(ak);
    if (r.status != DecomposeStatus::Ok)
      throw std::domain_error("not an automorphism");
    Auto acc = Auto::identity(p, RingTag::K);
    for (auto it = r.word.letters.rbegin(); it != r.word.letters.rend(); ++it)
      acc = acc * invert(it->value);
    inv = acc;
  }
  return tag == RingTag::K ? *inv : inv->view_over(RingTag::R);
}

}  // namespace autxy
