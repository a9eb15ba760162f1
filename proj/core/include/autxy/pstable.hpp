#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "autxy/auto2.hpp"

namespace autxy {

// C(n, k) mod p by Lucas' digit decomposition; p must be prime.
long long binom_mod_p(long long n, long long k, int p);

// Exponents with nonzero coefficient in (y+1)^n over F_p, found by actually
// expanding the power (independent of binom_mod_p on purpose).
std::set<long long> expand_binomial_support(long long n, int p);

// Subset I of {2, 3, ...} controlling which shear exponents a triangular
// subgroup admits.  Closed under the textual forms of the CLI plus the
// symbolic families with known stability certificates.
class PStableSet {
 public:
  enum class Kind {
    Empty,
    Finite,
    RangeTo,      // {2..k}
    PPowers,      // {p^j : j >= 1}
    PMultiples,   // {p, 2p, 3p, ...}
    AllGe2,       // {2, 3, 4, ...}
    ScaledRange,  // p^n * {1..k}
    ScaledAll,    // p^n * {1, 2, 3, ...}
    PPowerPair,   // {p^n, p^n + 1}
    Union,
    Intersection,
  };

  static PStableSet empty(int p);
  static PStableSet finite(const std::set<long long>& elems, int p);
  static PStableSet range_to(long long k, int p);
  static PStableSet p_powers(int p);
  static PStableSet p_multiples(int p);
  static PStableSet all_ge2(int p);
  static PStableSet scaled_range(int n, long long k, int p);
  static PStableSet scaled_all(int n, int p);
  static PStableSet p_power_pair(int n, int p);
  static PStableSet union_of(const std::vector<PStableSet>& parts);
  static PStableSet intersection_of(const std::vector<PStableSet>& parts);

  Kind kind() const { return kind_; }
  int p() const { return p_; }
  bool contains(long long m) const;
  // Elements as an explicit list when the set is finite; nullopt for the
  // unbounded families.
  std::optional<std::vector<long long>> materialize() const;
  const std::vector<PStableSet>& parts() const { return parts_; }
  long long param_k() const { return k_; }
  int param_n() const { return n_; }

  std::string str() const;

 private:
  PStableSet(Kind k, int p) : kind_(k), p_(p) {}

  Kind kind_;
  int p_;
  std::vector<long long> elems_;   // Finite, sorted
  long long k_ = 0;                // RangeTo / ScaledRange upper factor
  int n_ = 0;                      // Scaled* / PPowerPair exponent
  std::vector<PStableSet> parts_;  // Union / Intersection

  long long scale() const;  // p^n_
};

struct StabilityReport {
  bool stable = false;
  bool exact = true;  // false when only audited up to audit_bound
  long long audit_bound = 0;
  std::string certificate;
  std::optional<std::pair<long long, long long>> counterexample;  // (n, k)
};

// Decides whether I is p-stable: exactly for finite sets via the binomial
// condition, by certificate for the symbolic families, by a bounded audit
// for mixed unions and intersections.
StabilityReport is_p_stable(const PStableSet& I, long long audit_bound = 200);

// Bounded check of the binomial condition on elements n <= nmax.
std::optional<std::pair<long long, long long>> stability_counterexample(
    const PStableSet& I, long long nmax);

struct TriangularSplit {
  bool in_subgroup = false;
  std::optional<long long> offending_exponent;
  // valid when in_subgroup: beta = shear_part * affine_part with the shear
  // supported on I and the affine part triangular-affine
  std::optional<Auto> shear_part, affine_part;
};

// Membership of a triangular automorphism over K in the subgroup whose
// shears are supported on I, with the witnessing factorization.
TriangularSplit triangular_in_AI(const Auto& beta, const PStableSet& I);

struct SubsetReport {
  bool subset = false;
  bool exact = true;
  long long bound = 0;
  std::optional<long long> witness;  // element of I \ J when not a subset
};

// Decides I subset-of J; exact when I is finite, otherwise verified up to
// the bound.
SubsetReport ai_order(const PStableSet& I, const PStableSet& J, long long bound = 200);

}  // namespace autxy
