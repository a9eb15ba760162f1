#pragma once

#include "autxy/tpoly.hpp"

namespace autxy {

// Element of K = F_p(t) as a reduced fraction: gcd(num, den) = 1 and den
// monic, so equality is structural.
class RatFunc {
 public:
  explicit RatFunc(int p) : num_(p), den_(TPoly::one(p)) {}
  RatFunc(const TPoly& n) : num_(n), den_(TPoly::one(n.p())) {}
  RatFunc(const TPoly& n, const TPoly& d);

  static RatFunc zero(int p) { return RatFunc(p); }
  static RatFunc one(int p) { return RatFunc(TPoly::one(p)); }
  static RatFunc constant(const Scalar& c) { return RatFunc(TPoly::constant(c)); }

  int p() const { return num_.p(); }
  const TPoly& num() const { return num_; }
  const TPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_integral() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  Scalar constant_value() const;  // requires is_constant()

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc inverse() const;
  RatFunc pow(int e) const;  // e >= 0

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

 private:
  TPoly num_, den_;

  void normalize();
};

}  // namespace autxy
