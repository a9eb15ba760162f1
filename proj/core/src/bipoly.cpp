#include "autxy/bipoly.hpp"

#include <stdexcept>
#include <vector>

namespace autxy {

namespace {

void check_compatible(const BiPoly& a, const BiPoly& b) {
  if (a.p() != b.p()) throw std::logic_error("characteristic mismatch");
  if (a.tag() != b.tag()) throw std::logic_error("ring tag mismatch");
}

}  // namespace

BiPoly BiPoly::term(const RatFunc& c, int i, int j, RingTag tag) {
  BiPoly f(c.p(), tag);
  f.add_term(c, i, j);
  return f;
}

RatFunc BiPoly::coeff(int i, int j) const {
  auto it = terms_.find(Exp2{i, j});
  if (it == terms_.end()) return RatFunc::zero(p_);
  return it->second;
}

void BiPoly::add_term(const RatFunc& c, int i, int j) {
  if (c.is_zero()) return;
  if (i < 0 || j < 0) throw std::invalid_argument("negative exponent");
  if (tag_ == RingTag::R && !c.is_integral())
    throw std::logic_error("non-integral coefficient in R-tagged polynomial");
  Exp2 e{i, j};
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  RatFunc s = it->second + c;
  if (s.is_zero())
    terms_.erase(it);
  else
    it->second = s;
}

BiPoly BiPoly::operator-() const {
  BiPoly f(p_, tag_);
  for (const auto& [e, c] : terms_) f.terms_.emplace(e, -c);
  return f;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  check_compatible(*this, o);
  BiPoly f = *this;
  for (const auto& [e, c] : o.terms_) f.add_term(c, e.i, e.j);
  return f;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator*(const BiPoly& o) const {
  check_compatible(*this, o);
  BiPoly f(p_, tag_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_)
      f.add_term(c1 * c2, e1.i + e2.i, e1.j + e2.j);
  return f;
}

BiPoly BiPoly::operator*(const RatFunc& c) const {
  BiPoly f(p_, tag_);
  for (const auto& [e, co] : terms_) f.add_term(co * c, e.i, e.j);
  return f;
}

BiPoly BiPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  BiPoly r = one(p_, tag_);
  BiPoly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

int BiPoly::total_degree() const {
  if (terms_.empty()) return kDegNegInf;
  const Exp2& top = terms_.rbegin()->first;
  return top.i + top.j;
}

int BiPoly::degree_in(Var v) const {
  if (terms_.empty()) return kDegNegInf;
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, v == Var::X ? e.i : e.j);
  return d;
}

BiPoly BiPoly::leading_form() const {
  BiPoly f(p_, tag_);
  int d = total_degree();
  if (d == kDegNegInf) return f;
  for (const auto& [e, c] : terms_)
    if (e.i + e.j == d) f.terms_.emplace(e, c);
  return f;
}

BiPoly BiPoly::without_constant() const {
  BiPoly f = *this;
  f.terms_.erase(Exp2{0, 0});
  return f;
}

BiPoly BiPoly::partial_derivative(Var v) const {
  BiPoly f(p_, tag_);
  for (const auto& [e, c] : terms_) {
    int k = v == Var::X ? e.i : e.j;
    if (k == 0) continue;
    RatFunc d = c * RatFunc::constant(Scalar(k, p_));
    if (v == Var::X)
      f.add_term(d, e.i - 1, e.j);
    else
      f.add_term(d, e.i, e.j - 1);
  }
  return f;
}

BiPoly BiPoly::substitute(const BiPoly& g1, const BiPoly& g2) const {
  check_compatible(g1, g2);
  if (g1.p() != p_) throw std::logic_error("characteristic mismatch");
  if (g1.tag() != tag_) throw std::logic_error("ring tag mismatch");
  // cache powers of g1 and g2
  std::vector<BiPoly> px{one(p_, tag_)}, py{one(p_, tag_)};
  auto power = [](std::vector<BiPoly>& cache, const BiPoly& base, int e) {
    while (static_cast<int>(cache.size()) <= e)
      cache.push_back(cache.back() * base);
    return cache[static_cast<std::size_t>(e)];
  };
  BiPoly acc(p_, tag_);
  for (const auto& [e, c] : terms_)
    acc = acc + power(px, g1, e.i) * power(py, g2, e.j) * c;
  return acc;
}

bool is_p_power(long long n, int p) {
  if (p <= 0) return n == 1;
  if (n < 1) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

bool BiPoly::is_additive() const {
  for (const auto& [e, c] : terms_) {
    if (e.i > 0 && e.j > 0) return false;
    long long n = e.i > 0 ? e.i : e.j;
    if (n == 0) return false;  // constant term
    if (p_ == 0) {
      if (n != 1) return false;
    } else if (!is_p_power(n, p_)) {
      return false;
    }
  }
  return true;
}

bool BiPoly::in_frobenius_subring() const {
  if (p_ == 0) return terms_.empty() || total_degree() == 0;
  for (const auto& [e, c] : terms_)
    if (e.i % p_ != 0 || e.j % p_ != 0) return false;
  return true;
}

bool BiPoly::is_integral() const {
  for (const auto& [e, c] : terms_)
    if (!c.is_integral()) return false;
  return true;
}

bool BiPoly::depends_on(Var v) const {
  for (const auto& [e, c] : terms_)
    if ((v == Var::X ? e.i : e.j) > 0) return true;
  return false;
}

BiPoly BiPoly::with_tag(RingTag t) const {
  if (t == tag_) return *this;
  if (t == RingTag::R && !is_integral())
    throw std::domain_error("polynomial is not defined over R");
  BiPoly f(p_, t);
  for (const auto& [e, c] : terms_) f.add_term(c, e.i, e.j);
  return f;
}

BiPoly to_bipoly(const RPoly& f, RingTag tag) {
  BiPoly g(f.p(), tag);
  for (int j = 0; j <= f.degree(); ++j) {
    TPoly c = f.coeff(j);
    if (!c.is_zero()) g.add_term(RatFunc(c), 0, j);
  }
  return g;
}

RPoly to_rpoly(const BiPoly& f) {
  if (f.depends_on(Var::X)) throw std::domain_error("polynomial depends on x");
  RPoly g(f.p());
  for (const auto& [e, c] : f.terms()) {
    if (!c.is_integral()) throw std::domain_error("polynomial is not defined over R");
    g = g + RPoly::monomial(c.num(), e.j);
  }
  return g;
}

}  // namespace autxy
