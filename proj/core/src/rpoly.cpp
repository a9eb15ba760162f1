#include "autxy/rpoly.hpp"

#include <stdexcept>

namespace autxy {

void RPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RPoly RPoly::monomial(const TPoly& c, int deg) {
  if (deg < 0) throw std::invalid_argument("negative degree");
  RPoly f(c.p());
  if (c.is_zero()) return f;
  f.c_.assign(static_cast<std::size_t>(deg) + 1, TPoly::zero(c.p()));
  f.c_.back() = c;
  return f;
}

TPoly RPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return TPoly::zero(p_);
  return c_[static_cast<std::size_t>(i)];
}

RPoly RPoly::operator-() const {
  RPoly f = *this;
  for (auto& c : f.c_) c = -c;
  return f;
}

RPoly RPoly::operator+(const RPoly& o) const {
  if (p_ != o.p_) throw std::logic_error("characteristic mismatch");
  RPoly f(p_);
  std::size_t n = std::max(c_.size(), o.c_.size());
  f.c_.assign(n, TPoly::zero(p_));
  for (std::size_t i = 0; i < n; ++i) {
    if (i < c_.size()) f.c_[i] = f.c_[i] + c_[i];
    if (i < o.c_.size()) f.c_[i] = f.c_[i] + o.c_[i];
  }
  f.trim();
  return f;
}

RPoly RPoly::operator-(const RPoly& o) const { return *this + (-o); }

RPoly RPoly::operator*(const RPoly& o) const {
  if (p_ != o.p_) throw std::logic_error("characteristic mismatch");
  RPoly f(p_);
  if (is_zero() || o.is_zero()) return f;
  f.c_.assign(c_.size() + o.c_.size() - 1, TPoly::zero(p_));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      f.c_[i + j] = f.c_[i + j] + c_[i] * o.c_[j];
  f.trim();
  return f;
}

RPoly RPoly::operator*(const TPoly& c) const {
  RPoly f = *this;
  for (auto& x : f.c_) x = x * c;
  f.trim();
  return f;
}

RPoly RPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  RPoly r = constant(TPoly::one(p_));
  RPoly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

RPoly RPoly::compose(const RPoly& g) const {
  RPoly acc(p_);
  for (std::size_t i = c_.size(); i-- > 0;)
    acc = acc * g + constant(c_[i]);
  return acc;
}

RPoly RPoly::derivative() const {
  RPoly f(p_);
  if (c_.size() <= 1) return f;
  f.c_.assign(c_.size() - 1, TPoly::zero(p_));
  for (std::size_t i = 1; i < c_.size(); ++i)
    f.c_[i - 1] = c_[i] * Scalar(static_cast<long long>(i), p_);
  f.trim();
  return f;
}

RPoly reduce_mod(const RPoly& f, const TPoly& a) {
  if (a.is_zero()) throw std::invalid_argument("modulus must be nonzero");
  RPoly r = f;
  for (auto& c : r.c_) c = c % a;
  r.trim();
  return r;
}

}  // namespace autxy
