#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace autxy {

// Ground characteristic. p = 0 selects exact rational arithmetic and is only
// meant for small sanity checks; every decomposition algorithm requires p > 0.
struct CharSpec {
  int p = 0;

  bool valid() const {
    if (p == 0) return true;
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }
};

// Element of the prime field F_p, or of Q when p == 0. Values are kept
// normalized: residues in [0, p) with denominator 1, rationals in lowest
// terms with positive denominator.
class Scalar {
 public:
  Scalar() = default;

  Scalar(long long v, int p) : num_(v), p_(p) { normalize(); }

  static Scalar zero(int p) { return Scalar(0, p); }
  static Scalar one(int p) { return Scalar(1, p); }

  static Scalar fraction(long long n, long long d, int p) {
    if (d == 0) throw std::domain_error("division by zero");
    Scalar s;
    s.p_ = p;
    if (p > 0) {
      s.num_ = n;
      s.normalize();
      return s * Scalar(d, p).inverse();
    }
    s.num_ = n;
    s.den_ = d;
    s.normalize();
    return s;
  }

  int characteristic() const { return p_; }
  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }

  Scalar operator-() const {
    Scalar s = *this;
    s.num_ = -s.num_;
    s.normalize();
    return s;
  }

  Scalar operator+(const Scalar& o) const {
    check(o);
    return fraction_raw(num_ * o.den_ + o.num_ * den_, den_ * o.den_, p_);
  }
  Scalar operator-(const Scalar& o) const { return *this + (-o); }
  Scalar operator*(const Scalar& o) const {
    check(o);
    return fraction_raw(num_ * o.num_, den_ * o.den_, p_);
  }
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

  Scalar inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (p_ == 0) {
      Scalar s;
      s.p_ = 0;
      s.num_ = den_;
      s.den_ = num_;
      s.normalize();
      return s;
    }
    // extended Euclid on (num_, p_)
    long long a = num_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
      long long q = a / b;
      long long tmp = a - q * b;
      a = b;
      b = tmp;
      tmp = x0 - q * x1;
      x0 = x1;
      x1 = tmp;
    }
    return Scalar(x0, p_);
  }

  bool operator==(const Scalar& o) const {
    return p_ == o.p_ && num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const {
    if (p_ > 0 || den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  long long num_ = 0;
  long long den_ = 1;
  int p_ = 0;

  static Scalar fraction_raw(long long n, long long d, int p) {
    Scalar s;
    s.num_ = n;
    s.den_ = d;
    s.p_ = p;
    s.normalize();
    return s;
  }

  void check(const Scalar& o) const {
    if (p_ != o.p_) throw std::logic_error("scalar characteristic mismatch");
  }

  void normalize() {
    if (p_ > 0) {
      if (den_ != 1) throw std::logic_error("residue with denominator");
      num_ %= p_;
      if (num_ < 0) num_ += p_;
      return;
    }
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }
};

}  // namespace autxy
