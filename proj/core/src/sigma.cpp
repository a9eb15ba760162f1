#include "autxy/sigma.hpp"

#include <random>
#include <stdexcept>

namespace autxy {

namespace {

bool congruent_to_y(const RPoly& f, const TPoly& a) {
  if (is_unit(a)) return true;
  return reduce_mod(f, a) == RPoly::y(a.p());
}

// nonzero constant remainder mod a, i.e. r = unit of R mod a
bool unit_residue(const TPoly& r, const TPoly& a) {
  TPoly m = r % a;
  return m.is_constant() && !m.is_zero();
}

}  // namespace

SigmaParams make_sigma_params(const TPoly& a, const RPoly& P, const RPoly& Q) {
  if (a.p() != P.p() || a.p() != Q.p())
    throw std::invalid_argument("characteristic mismatch");
  if (a.is_zero()) throw std::invalid_argument("modulus must be nonzero");
  if (!congruent_to_y(P.compose(Q), a) || !congruent_to_y(Q.compose(P), a))
    throw std::invalid_argument("P∘Q ≢ y mod a");
  return SigmaParams{a, P, Q};
}

SigmaBuild make_sigma(const SigmaParams& s) {
  int p = s.a.p();
  RatFunc u1{s.a};
  RatFunc ainv = u1.inverse();

  TriangularForm t1{u1, {}, RatFunc::one(p), RatFunc::zero(p)};
  for (int j = 0; j <= s.P.degree(); ++j) {
    TPoly c = s.P.coeff(j);
    if (!c.is_zero()) t1.shear.emplace(j, RatFunc(c));
  }
  TriangularForm t2{-ainv, {}, RatFunc::one(p), RatFunc::zero(p)};
  for (int j = 0; j <= s.Q.degree(); ++j) {
    TPoly c = s.Q.coeff(j);
    if (!c.is_zero()) t2.shear.emplace(j, RatFunc(c) * ainv);
  }

  Word w;
  w.letters = {Letter{LetterTag::B, make_triangular(p, RingTag::K, t1)},
               Letter{LetterTag::A, Auto::transposition(p, RingTag::K)},
               Letter{LetterTag::B, make_triangular(p, RingTag::K, t2)}};
  Auto sigma_k = word_eval(w, p, RingTag::K);
  return SigmaBuild{sigma_k.view_over(RingTag::R), w};
}

bool sigma_is_tame(const SigmaParams& s) {
  if (is_unit(s.a)) return true;
  for (int j = 2; j <= s.P.degree(); ++j)
    if (!(s.P.coeff(j) % s.a).is_zero()) return false;
  return unit_residue(s.P.coeff(1), s.a);
}

bool sigma_is_diff_affine(const SigmaParams& s) {
  RPoly pd = s.P.derivative(), qd = s.Q.derivative();
  return pd.degree() == 0 && is_unit(pd.coeff(0)) && qd.degree() == 0 &&
         is_unit(qd.coeff(0));
}

bool sigma_in_ht(const SigmaParams& s) {
  if (is_unit(s.a)) return true;
  RPoly pd = s.P.derivative();
  for (int j = 1; j <= pd.degree(); ++j)
    if (!(pd.coeff(j) % s.a).is_zero()) return false;
  return unit_residue(pd.coeff(0), s.a);
}

std::pair<RPoly, RPoly> double_coset_reps(const SigmaParams& s) {
  return {reduce_mod(s.P, s.a), reduce_mod(s.Q, s.a)};
}

WitnessReport nonnormality_witness(const PStableSet& I, const PStableSet& J,
                                   const TPoly& a) {
  int p = a.p();
  if (I.p() != p || J.p() != p)
    throw std::invalid_argument("characteristic mismatch");
  if (a.is_zero() || is_unit(a))
    throw std::invalid_argument("a must be a non-unit");
  if (!is_p_stable(I).stable || !is_p_stable(J).stable)
    throw std::domain_error("exponent set is not p-stable");

  SubsetReport sub = ai_order(J, I);
  if (sub.subset) throw std::domain_error("I not proper in J");
  long long n = *sub.witness;

  RPoly shift = RPoly::monomial(a, static_cast<int>(n));
  SigmaParams params =
      make_sigma_params(a * a, RPoly::y(p) + shift, RPoly::y(p) - shift);
  SigmaBuild b = make_sigma(params);

  Letter b1 = b.letters.letters[0];
  Letter t = b.letters.letters[1];
  Letter b2 = b.letters.letters[2];
  Word w;
  w.letters = {b1,
               t,
               b2,
               t,
               Letter{LetterTag::B, invert(b2.value)},
               t,
               Letter{LetterTag::B, invert(b1.value)}};

  GroupOracles o = affine_triangular_oracles();
  if (!is_reduced(w, o)) throw std::logic_error("witness word is not reduced");
  std::vector<LetterVerdict> verdicts = criterion_letters(w, o, I);
  bool refuted = false;
  for (const auto& v : verdicts) refuted = refuted || !v.pass;
  if (!refuted) throw std::logic_error("witness criterion unexpectedly passed");

  Auto h = word_eval(w, p, RingTag::K).view_over(RingTag::R);
  return WitnessReport{n,
                       params,
                       b.sigma,
                       Auto::transposition(p, RingTag::R),
                       h,
                       w,
                       verdicts,
                       false};
}

SigmaParams random_sigma_params(std::uint64_t seed, int p, bool tame) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    std::mt19937_64 rng(seed + attempt * 0x9e3779b97f4a7c15ULL);
    auto draw = [&rng](long long lo, long long hi) {
      return lo +
             static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    auto scalar = [&](long long lo, long long hi) {
      return Scalar(draw(lo, hi), p);
    };

    int k = static_cast<int>(draw(2, 3));
    TPoly a = TPoly::monomial(Scalar::one(p), k);

    Scalar b = Scalar::zero(p);
    while (b.is_zero()) b = scalar(1, p > 0 ? p - 1 : 5);
    TPoly c = TPoly::constant(scalar(0, p > 0 ? p - 1 : 3)) +
              TPoly::monomial(scalar(0, p > 0 ? p - 1 : 3), 1);

    RPoly P = RPoly::y(p) * TPoly::constant(b) + RPoly::constant(c);
    RPoly D = RPoly::zero(p);
    int terms = static_cast<int>(draw(1, 2));
    for (int i = 0; i < terms; ++i) {
      int j = static_cast<int>(draw(2, 3));
      TPoly d = TPoly::monomial(Scalar::one(p), 1) *
                (TPoly::one(p) +
                 TPoly::monomial(scalar(0, p > 0 ? p - 1 : 2), 1));
      if (tame) d = d * a;
      D = D + RPoly::monomial(d, j);
    }
    P = P + D;

    TPoly binv = TPoly::constant(b.inverse());
    RPoly Q = RPoly::y(p);
    for (int i = 0; i < 2 * k + 2; ++i)
      Q = reduce_mod((RPoly::y(p) - RPoly::constant(c) - D.compose(Q)) * binv,
                     a);

    // in small characteristic the drawn correction terms can cancel, leaving
    // a linear pair whose automorphism never reaches amalgam length 3; keep
    // drawing until the wild branch is honestly nonlinear on both sides
    if (!tame && (P.degree() < 2 || Q.degree() < 2)) continue;

    return make_sigma_params(a, P, Q);
  }
}

}  // namespace autxy
