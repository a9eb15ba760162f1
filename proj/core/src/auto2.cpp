#include "autxy/auto2.hpp"

#include <stdexcept>

namespace autxy {

Auto::Auto(const BiPoly& f1, const BiPoly& f2) : f1_(f1), f2_(f2) {
  if (f1.p() != f2.p()) throw std::logic_error("characteristic mismatch");
  if (f1.tag() != f2.tag()) throw std::logic_error("ring tag mismatch");
}

Auto Auto::identity(int p, RingTag tag) {
  return Auto(BiPoly::x(p, tag), BiPoly::y(p, tag));
}

Auto Auto::transposition(int p, RingTag tag) {
  return Auto(BiPoly::y(p, tag), BiPoly::x(p, tag));
}

bool Auto::is_identity() const {
  return f1_ == BiPoly::x(p(), tag()) && f2_ == BiPoly::y(p(), tag());
}

Auto operator*(const Auto& a, const Auto& b) {
  return Auto(b.f1().substitute(a.f1(), a.f2()),
              b.f2().substitute(a.f1(), a.f2()));
}

Auto compose(const Auto& phi, const Auto& psi) { return psi * phi; }

Jacobian jacobian(const Auto& a) {
  Jacobian j{{{a.f1().partial_derivative(Var::X), a.f1().partial_derivative(Var::Y)},
              {a.f2().partial_derivative(Var::X), a.f2().partial_derivative(Var::Y)}}};
  return j;
}

bool is_ring_unit(const RatFunc& v, RingTag tag) {
  if (v.is_zero()) return false;
  if (tag == RingTag::K) return true;
  return v.is_integral() && is_unit(v.num());
}

std::optional<TriangularForm> as_triangular(const Auto& a) {
  TriangularForm f{RatFunc::zero(a.p()), {}, RatFunc::zero(a.p()), RatFunc::zero(a.p())};
  for (const auto& [e, c] : a.f2().terms()) {
    if (e.i == 0 && e.j == 1)
      f.v = c;
    else if (e.i == 0 && e.j == 0)
      f.w = c;
    else
      return std::nullopt;
  }
  for (const auto& [e, c] : a.f1().terms()) {
    if (e.i == 1 && e.j == 0)
      f.u = c;
    else if (e.i == 0)
      f.shear.emplace(e.j, c);
    else
      return std::nullopt;
  }
  if (!is_ring_unit(f.u, a.tag()) || !is_ring_unit(f.v, a.tag())) return std::nullopt;
  return f;
}

std::optional<AffineForm> as_affine(const Auto& a) {
  if (a.f1().total_degree() > 1 || a.f2().total_degree() > 1) return std::nullopt;
  AffineForm f{{{a.f1().coeff(1, 0), a.f1().coeff(0, 1)},
                {a.f2().coeff(1, 0), a.f2().coeff(0, 1)}},
               {a.f1().coeff(0, 0), a.f2().coeff(0, 0)}};
  if (!is_ring_unit(f.det(), a.tag())) return std::nullopt;
  return f;
}

Auto make_affine(int p, RingTag tag, const AffineForm& f) {
  if (!is_ring_unit(f.det(), tag))
    throw std::domain_error("affine part is not invertible");
  BiPoly f1 = BiPoly::x(p, tag) * f.m[0][0] + BiPoly::y(p, tag) * f.m[0][1] +
              BiPoly::constant(f.b[0], tag);
  BiPoly f2 = BiPoly::x(p, tag) * f.m[1][0] + BiPoly::y(p, tag) * f.m[1][1] +
              BiPoly::constant(f.b[1], tag);
  return Auto(f1, f2);
}

Auto make_triangular(int p, RingTag tag, const TriangularForm& f) {
  if (!is_ring_unit(f.u, tag) || !is_ring_unit(f.v, tag))
    throw std::domain_error("triangular units are not invertible");
  BiPoly f1 = BiPoly::x(p, tag) * f.u;
  for (const auto& [j, c] : f.shear) f1.add_term(c, 0, j);
  BiPoly f2 = BiPoly::y(p, tag) * f.v + BiPoly::constant(f.w, tag);
  return Auto(f1, f2);
}

Auto make_shear(int p, RingTag tag, const std::map<int, RatFunc>& shear) {
  TriangularForm f{RatFunc::one(p), shear, RatFunc::one(p), RatFunc::zero(p)};
  return make_triangular(p, tag, f);
}

namespace {

bool is_elementary(const Auto& a) {
  int p = a.p();
  // fixes y and sends x to u x + f(y), or the transposed shape
  auto check = [p](const BiPoly& moved, Var mv, RingTag tag) {
    RatFunc u = RatFunc::zero(p);
    for (const auto& [e, c] : moved.terms()) {
      int own = mv == Var::X ? e.i : e.j;
      int other = mv == Var::X ? e.j : e.i;
      if (own == 1 && other == 0)
        u = c;
      else if (own != 0)
        return false;
    }
    return is_ring_unit(u, tag);
  };
  if (a.f2() == BiPoly::y(p, a.tag()))
    return check(a.f1(), Var::X, a.tag());
  if (a.f1() == BiPoly::x(p, a.tag()))
    return check(a.f2(), Var::Y, a.tag());
  return false;
}

}  // namespace

ClassFlags classify(const Auto& a) {
  ClassFlags c;
  auto aff = as_affine(a);
  if (aff) {
    c.affine = true;
    bool id_linear = aff->m[0][0].is_one() && aff->m[0][1].is_zero() &&
                     aff->m[1][0].is_zero() && aff->m[1][1].is_one();
    c.translation = id_linear;
    c.linear = aff->b[0].is_zero() && aff->b[1].is_zero();
  }
  c.triangular = as_triangular(a).has_value();
  c.elementary = is_elementary(a);
  c.additive = a.f1().is_additive() && a.f2().is_additive();
  c.geom_affine = a.f1().without_constant().is_additive() &&
                  a.f2().without_constant().is_additive();
  Jacobian j = jacobian(a);
  bool const_entries = true;
  for (int r = 0; r < 2; ++r)
    for (int col = 0; col < 2; ++col)
      if (!j.m[r][col].is_zero() && j.m[r][col].total_degree() > 0)
        const_entries = false;
  if (const_entries) {
    RatFunc det = j.det().constant_term();
    c.diff_affine = is_ring_unit(det, a.tag());
  }
  return c;
}

}  // namespace autxy
