#pragma once

#include <cstdint>

#include "autxy/decompose.hpp"

namespace autxy {

// Data for sigma = (a^{-1}(Q(a x + P(y)) - y), a x + P(y)).  The congruence
// P(Q(y)) = Q(P(y)) = y mod aR[y] makes both components integral.
struct SigmaParams {
  TPoly a;
  RPoly P, Q;
};

// Validates the congruence (and characteristic agreement); throws
// std::invalid_argument on failure.
SigmaParams make_sigma_params(const TPoly& a, const RPoly& P, const RPoly& Q);

struct SigmaBuild {
  Auto sigma;    // over R
  Word letters;  // over K: (a x + P(y), y), (y, x), (-a^{-1} x + a^{-1} Q(y), y)
};

SigmaBuild make_sigma(const SigmaParams& s);

// P = b y + c mod aR[y] with b a unit of R.
bool sigma_is_tame(const SigmaParams& s);

// P' and Q' are units of R.
bool sigma_is_diff_affine(const SigmaParams& s);

// P' = b mod aR[y] with b a unit of R: membership in the subgroup generated
// by the differentially affine part and the tame part.
bool sigma_in_ht(const SigmaParams& s);

// (P mod a, Q mod a): invariants of the double coset of sigma.
std::pair<RPoly, RPoly> double_coset_reps(const SigmaParams& s);

struct WitnessReport {
  long long n;      // exponent in J but not in I
  SigmaParams params;
  Auto g;           // sigma(a^2, y + a y^n, y - a y^n), over R
  Auto t;           // the transposition, over R
  Auto h;           // g t g^{-1}, over R
  Word word;        // reduced 7-letter word of h
  std::vector<LetterVerdict> verdicts;
  bool in_subgroup; // false: the letter criterion refutes membership
};

// Conjugating the transposition by a wild sigma built from an exponent of
// J \ I produces an element outside the subgroup with shear support I; the
// failing head letter certifies it.  a must be a nonzero non-unit.
WitnessReport nonnormality_witness(const PStableSet& I, const PStableSet& J,
                                   const TPoly& a);

// Deterministic pseudorandom parameters with a = t^k; tame ones keep the
// nonlinear part of P inside aR[y].
SigmaParams random_sigma_params(std::uint64_t seed, int p, bool tame);

}  // namespace autxy
