#pragma once

#include <map>
#include <optional>

#include "autxy/bipoly.hpp"

namespace autxy {

// Endomorphism of R[x,y] or K[x,y] given by the images of x and y.  Values
// are only certified as automorphisms by a successful decomposition.
class Auto {
 public:
  Auto(const BiPoly& f1, const BiPoly& f2);

  static Auto identity(int p, RingTag tag);
  // (y, x)
  static Auto transposition(int p, RingTag tag);

  const BiPoly& f1() const { return f1_; }
  const BiPoly& f2() const { return f2_; }
  int p() const { return f1_.p(); }
  RingTag tag() const { return f1_.tag(); }

  Auto view_over(RingTag t) const { return Auto(f1_.with_tag(t), f2_.with_tag(t)); }
  bool is_identity() const;

  bool operator==(const Auto& o) const { return f1_ == o.f1_ && f2_ == o.f2_; }
  bool operator!=(const Auto& o) const { return !(*this == o); }

 private:
  BiPoly f1_, f2_;
};

// Group product in juxtaposition order: (a*b).fi = b.fi evaluated at
// (a.f1, a.f2), i.e. as algebra maps (a*b)(u) = a(b(u)).
Auto operator*(const Auto& a, const Auto& b);

// "first phi, then psi" on coordinates; equal to psi * phi.
Auto compose(const Auto& phi, const Auto& psi);

struct Jacobian {
  // m[r][c] = d(f_{r+1}) / d(variable c), variables ordered x, y
  BiPoly m[2][2];
  BiPoly det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
};

Jacobian jacobian(const Auto& a);

struct ClassFlags {
  bool translation = false;
  bool linear = false;
  bool affine = false;
  bool elementary = false;
  bool triangular = false;
  bool additive = false;
  bool geom_affine = false;
  bool diff_affine = false;
};

// Syntactic classification against the subgroup ladder.  Affine-type flags
// include the unit/invertibility requirements of the ambient ring tag.
ClassFlags classify(const Auto& a);

// Triangular shape (u x + P(y), v y + w) with u, v units.
struct TriangularForm {
  RatFunc u;
  std::map<int, RatFunc> shear;  // exponent -> coefficient of P(y)
  RatFunc v, w;
};

// Affine shape: images (m00 x + m01 y + b0, m10 x + m11 y + b1).
struct AffineForm {
  RatFunc m[2][2];
  RatFunc b[2];
  RatFunc det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
};

std::optional<TriangularForm> as_triangular(const Auto& a);
std::optional<AffineForm> as_affine(const Auto& a);

Auto make_affine(int p, RingTag tag, const AffineForm& f);
Auto make_triangular(int p, RingTag tag, const TriangularForm& f);
// (x + P(y), y)
Auto make_shear(int p, RingTag tag, const std::map<int, RatFunc>& shear);

// Whether v is a unit of the coefficient ring named by the tag.
bool is_ring_unit(const RatFunc& v, RingTag tag);

// Inverse automorphism.  Closed-form for affine and triangular shapes,
// otherwise through the van der Kulk decomposition (see decompose.hpp).
// Throws std::domain_error if the input is not an automorphism.
Auto invert(const Auto& a);

}  // namespace autxy
