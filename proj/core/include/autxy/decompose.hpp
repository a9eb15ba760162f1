#pragma once

#include "autxy/word.hpp"

namespace autxy {

enum class DecomposeStatus { Ok, NotAutomorphism };

// One pass of the van der Kulk loop: the component named by `reduced` lost
// its leading form to alpha * (other component)^d.
struct ReductionStep {
  Var reduced;
  RatFunc alpha;
  int d;
};

struct DecomposeResult {
  DecomposeStatus status = DecomposeStatus::NotAutomorphism;
  Word word;                         // normalized, evaluates to the input
  std::vector<ReductionStep> steps;  // raw reduction trace
};

// Jung-van der Kulk decomposition over K.  R-tagged input is decomposed
// through its K view and the letters are K-tagged.
DecomposeResult decompose(const Auto& g);

// Decomposition of a differentially affine automorphism; every degree ratio
// in the trace must be 1 or divisible by p, else std::logic_error.
DecomposeResult decompose_diff_affine(const Auto& g);

// Decomposition of an additive automorphism; degree ratios must be p-powers
// and every letter additive, else std::logic_error.
DecomposeResult decompose_additive(const Auto& g);

// Letter count of the reduced word; elements of Aff cap BA count as 0.
// Throws std::domain_error if g is not an automorphism.
int amalgam_length(const Auto& g);

// K-automorphism whose components and inverse components are all integral.
bool is_r_automorphism(const Auto& g);

}  // namespace autxy
