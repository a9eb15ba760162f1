#include "autxy/tpoly.hpp"

#include <stdexcept>

namespace autxy {

void TPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

TPoly TPoly::monomial(const Scalar& c, int deg) {
  if (deg < 0) throw std::invalid_argument("negative degree");
  TPoly f(c.characteristic());
  if (c.is_zero()) return f;
  f.c_.assign(static_cast<std::size_t>(deg) + 1, Scalar::zero(c.characteristic()));
  f.c_.back() = c;
  return f;
}

TPoly TPoly::from_ints(const std::vector<long long>& asc, int p) {
  TPoly f(p);
  f.c_.reserve(asc.size());
  for (long long v : asc) f.c_.push_back(Scalar(v, p));
  f.trim();
  return f;
}

Scalar TPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Scalar::zero(p_);
  return c_[static_cast<std::size_t>(i)];
}

Scalar TPoly::leading() const {
  if (c_.empty()) return Scalar::zero(p_);
  return c_.back();
}

TPoly TPoly::operator-() const {
  TPoly f = *this;
  for (auto& c : f.c_) c = -c;
  return f;
}

TPoly TPoly::operator+(const TPoly& o) const {
  if (p_ != o.p_) throw std::logic_error("characteristic mismatch");
  TPoly f(p_);
  std::size_t n = std::max(c_.size(), o.c_.size());
  f.c_.assign(n, Scalar::zero(p_));
  for (std::size_t i = 0; i < n; ++i) {
    if (i < c_.size()) f.c_[i] = f.c_[i] + c_[i];
    if (i < o.c_.size()) f.c_[i] = f.c_[i] + o.c_[i];
  }
  f.trim();
  return f;
}

TPoly TPoly::operator-(const TPoly& o) const { return *this + (-o); }

TPoly TPoly::operator*(const TPoly& o) const {
  if (p_ != o.p_) throw std::logic_error("characteristic mismatch");
  TPoly f(p_);
  if (is_zero() || o.is_zero()) return f;
  f.c_.assign(c_.size() + o.c_.size() - 1, Scalar::zero(p_));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      f.c_[i + j] = f.c_[i + j] + c_[i] * o.c_[j];
  f.trim();
  return f;
}

TPoly TPoly::operator*(const Scalar& c) const {
  TPoly f = *this;
  for (auto& x : f.c_) x = x * c;
  f.trim();
  return f;
}

std::pair<TPoly, TPoly> TPoly::divmod(const TPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  TPoly q(p_), r = *this;
  if (r.degree() >= d.degree())
    q.c_.assign(static_cast<std::size_t>(r.degree() - d.degree()) + 1, Scalar::zero(p_));
  Scalar lead_inv = d.leading().inverse();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int k = r.degree() - d.degree();
    Scalar c = r.leading() * lead_inv;
    q.c_[static_cast<std::size_t>(k)] = c;
    r = r - TPoly::monomial(c, k) * d;
  }
  q.trim();
  return {q, r};
}

TPoly TPoly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

bool is_unit(const TPoly& r) { return r.degree() == 0; }

TPoly gcd(const TPoly& a, const TPoly& b) {
  TPoly x = a, y = b;
  while (!y.is_zero()) {
    TPoly r = x % y;
    x = y;
    y = r;
  }
  return x.monic();
}

}  // namespace autxy
