#pragma once

#include <utility>
#include <vector>

#include "autxy/scalar.hpp"

namespace autxy {

// Dense polynomial in t over F_p (over Q when p == 0).  This is the base
// ring R = F_p[t]; its units are the nonzero constants.
class TPoly {
 public:
  explicit TPoly(int p) : p_(p) {}
  explicit TPoly(const Scalar& c) : p_(c.characteristic()) {
    if (!c.is_zero()) c_.push_back(c);
  }

  static TPoly zero(int p) { return TPoly(p); }
  static TPoly one(int p) { return constant(Scalar::one(p)); }
  static TPoly constant(const Scalar& c) { return TPoly(c); }
  static TPoly t(int p) { return monomial(Scalar::one(p), 1); }
  static TPoly monomial(const Scalar& c, int deg);
  // Coefficients in ascending degree: {1, 0, 2} is 2t^2 + 1.
  static TPoly from_ints(const std::vector<long long>& asc, int p);

  int p() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1: zero
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_constant() const { return c_.size() <= 1; }
  Scalar coeff(int i) const;
  Scalar leading() const;
  Scalar constant_term() const { return coeff(0); }

  TPoly operator-() const;
  TPoly operator+(const TPoly& o) const;
  TPoly operator-(const TPoly& o) const;
  TPoly operator*(const TPoly& o) const;
  TPoly operator*(const Scalar& c) const;

  // Euclidean division; throws on zero divisor.
  std::pair<TPoly, TPoly> divmod(const TPoly& d) const;
  TPoly operator/(const TPoly& d) const { return divmod(d).first; }
  TPoly operator%(const TPoly& d) const { return divmod(d).second; }
  bool divides(const TPoly& f) const { return !is_zero() && (f % *this).is_zero(); }

  TPoly monic() const;

  bool operator==(const TPoly& o) const { return p_ == o.p_ && c_ == o.c_; }
  bool operator!=(const TPoly& o) const { return !(*this == o); }

 private:
  std::vector<Scalar> c_;  // ascending, no trailing zeros
  int p_ = 0;

  void trim();
  friend TPoly gcd(const TPoly&, const TPoly&);
};

// true iff r is a unit of R = F_p[t]: a nonzero constant.
bool is_unit(const TPoly& r);

// Monic gcd; gcd(0, 0) = 0.
TPoly gcd(const TPoly& a, const TPoly& b);

}  // namespace autxy
