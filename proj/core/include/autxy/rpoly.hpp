#pragma once

#include <vector>

#include "autxy/tpoly.hpp"

namespace autxy {

// Polynomial in y with coefficients in R = F_p[t], dense in y.
class RPoly {
 public:
  explicit RPoly(int p) : p_(p) {}

  static RPoly zero(int p) { return RPoly(p); }
  static RPoly y(int p) { return monomial(TPoly::one(p), 1); }
  static RPoly constant(const TPoly& c) { return monomial(c, 0); }
  static RPoly monomial(const TPoly& c, int deg);

  int p() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1: zero
  bool is_zero() const { return c_.empty(); }
  TPoly coeff(int i) const;

  RPoly operator-() const;
  RPoly operator+(const RPoly& o) const;
  RPoly operator-(const RPoly& o) const;
  RPoly operator*(const RPoly& o) const;
  RPoly operator*(const TPoly& c) const;
  RPoly pow(int e) const;

  // f(g): substitution of g for y.
  RPoly compose(const RPoly& g) const;
  RPoly derivative() const;

  bool operator==(const RPoly& o) const { return p_ == o.p_ && c_ == o.c_; }
  bool operator!=(const RPoly& o) const { return !(*this == o); }

 private:
  std::vector<TPoly> c_;  // ascending in y, no trailing zeros
  int p_ = 0;

  void trim();
  friend RPoly reduce_mod(const RPoly&, const TPoly&);
};

// Coefficient-wise remainder mod a; throws if a = 0.
RPoly reduce_mod(const RPoly& f, const TPoly& a);

}  // namespace autxy
