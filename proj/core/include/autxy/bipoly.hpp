#pragma once

#include <limits>
#include <map>

#include "autxy/ratfunc.hpp"
#include "autxy/rpoly.hpp"

namespace autxy {

// Degree of the zero polynomial.  A large negative sentinel (not -1) so the
// degree inequalities in the reduction loops hold without special cases.
inline constexpr int kDegNegInf = std::numeric_limits<int>::min() / 2;

enum class RingTag { R, K };
enum class Var { X, Y };

struct Exp2 {
  int i = 0;  // power of x
  int j = 0;  // power of y
  bool operator==(const Exp2& o) const { return i == o.i && j == o.j; }
};

// Graded lexicographic: total degree first, then x-degree.
struct GradedLex {
  bool operator()(const Exp2& a, const Exp2& b) const {
    if (a.i + a.j != b.i + b.j) return a.i + a.j < b.i + b.j;
    return a.i < b.i;
  }
};

// Element of R[x,y] or K[x,y] as a finite map from exponent pairs to
// nonzero coefficients.  An R-tagged value keeps every coefficient integral.
class BiPoly {
 public:
  using TermMap = std::map<Exp2, RatFunc, GradedLex>;

  BiPoly(int p, RingTag tag) : p_(p), tag_(tag) {}

  static BiPoly zero(int p, RingTag tag) { return BiPoly(p, tag); }
  static BiPoly one(int p, RingTag tag) {
    return term(RatFunc::one(p), 0, 0, tag);
  }
  static BiPoly x(int p, RingTag tag) { return term(RatFunc::one(p), 1, 0, tag); }
  static BiPoly y(int p, RingTag tag) { return term(RatFunc::one(p), 0, 1, tag); }
  static BiPoly constant(const RatFunc& c, RingTag tag) { return term(c, 0, 0, tag); }
  static BiPoly term(const RatFunc& c, int i, int j, RingTag tag);

  int p() const { return p_; }
  RingTag tag() const { return tag_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  RatFunc coeff(int i, int j) const;

  void add_term(const RatFunc& c, int i, int j);

  BiPoly operator-() const;
  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly operator*(const RatFunc& c) const;
  BiPoly pow(int e) const;

  bool operator==(const BiPoly& o) const {
    return p_ == o.p_ && tag_ == o.tag_ && terms_ == o.terms_;
  }
  bool operator!=(const BiPoly& o) const { return !(*this == o); }

  int total_degree() const;  // kDegNegInf for zero
  int degree_in(Var v) const;
  BiPoly leading_form() const;  // homogeneous part of top total degree
  RatFunc constant_term() const { return coeff(0, 0); }
  BiPoly without_constant() const;

  BiPoly partial_derivative(Var v) const;
  // f(g1, g2): simultaneous substitution x -> g1, y -> g2.
  BiPoly substitute(const BiPoly& g1, const BiPoly& g2) const;

  // f = sum c_{i,j} x_i^{p^j} with no constant term; p = 0 degenerates to
  // linear forms without constants.
  bool is_additive() const;
  // every exponent divisible by p, i.e. f in R[x^p, y^p] (constants allowed)
  bool in_frobenius_subring() const;

  bool is_integral() const;  // all coefficient denominators trivial
  bool depends_on(Var v) const;
  BiPoly with_tag(RingTag t) const;  // R -> K free; K -> R checks integrality

 private:
  TermMap terms_;
  int p_ = 0;
  RingTag tag_ = RingTag::K;
};

// Bridges between R[y] and the bivariate type.
BiPoly to_bipoly(const RPoly& f, RingTag tag);
RPoly to_rpoly(const BiPoly& f);  // requires x-free and integral

bool is_p_power(long long n, int p);  // n = p^k, k >= 0

}  // namespace autxy
