#include "autxy/ratfunc.hpp"

#include <stdexcept>

namespace autxy {

RatFunc::RatFunc(const TPoly& n, const TPoly& d) : num_(n), den_(d) {
  if (d.is_zero()) throw std::domain_error("zero denominator");
  normalize();
}

void RatFunc::normalize() {
  TPoly g = gcd(num_, den_);
  if (!g.is_zero() && !g.is_one()) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  Scalar lead = den_.leading();
  if (!lead.is_one()) {
    Scalar inv = lead.inverse();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
  if (num_.is_zero()) den_ = TPoly::one(num_.p());
}

Scalar RatFunc::constant_value() const {
  if (!is_constant()) throw std::logic_error("not a constant");
  return num_.constant_term();
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  RatFunc r = RatFunc::one(p());
  RatFunc base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

}  // namespace autxy
