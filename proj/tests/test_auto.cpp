#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "autxy/auto2.hpp"
#include "support/generators.hpp"

using namespace autxy;

namespace {

Auto shear_y2(int p, RingTag tag) {  // (x + y^2, y)
  return make_shear(p, tag, {{2, RatFunc::one(p)}});
}

BiPoly sub2(const BiPoly& f, const Auto& a) { return f.substitute(a.f1(), a.f2()); }

}  // namespace

TEST_CASE("product convention is juxtaposition") {
  int p = 5;
  RingTag R = RingTag::R;
  Auto e = shear_y2(p, R);
  Auto tau = Auto::transposition(p, R);
  BiPoly x = BiPoly::x(p, R), y = BiPoly::y(p, R);

  Auto et = e * tau;  // (e tau)(u) = e(tau(u))
  CHECK(et.f1() == y);
  CHECK(et.f2() == x + y.pow(2));

  Auto te = tau * e;
  CHECK(te.f1() == y + x.pow(2));
  CHECK(te.f2() == x);

  CHECK(compose(e, tau) == tau * e);
  CHECK(e * Auto::identity(p, R) == e);
  CHECK(Auto::identity(p, R) * e == e);
  CHECK((e * tau) * e == e * (tau * e));
}

TEST_CASE("identity and views") {
  Auto id = Auto::identity(3, RingTag::R);
  CHECK(id.is_identity());
  CHECK_FALSE(Auto::transposition(3, RingTag::R).is_identity());
  Auto k = id.view_over(RingTag::K);
  CHECK(k.tag() == RingTag::K);
  CHECK(k.view_over(RingTag::R) == id);
}

TEST_CASE("jacobian entries and chain rule") {
  int p = 5;
  RingTag R = RingTag::R;
  Auto tau = Auto::transposition(p, R);
  Jacobian jt = jacobian(tau);
  CHECK(jt.m[0][0].is_zero());
  CHECK(jt.m[0][1] == BiPoly::one(p, R));
  CHECK(jt.m[1][0] == BiPoly::one(p, R));
  CHECK(jt.m[1][1].is_zero());
  CHECK(jt.det() == -BiPoly::one(p, R));

  Auto e = shear_y2(p, R);
  CHECK(jacobian(e).det() == BiPoly::one(p, R));

  testgen::Rng rng(42);
  for (int it = 0; it < 15; ++it) {
    Auto a = testgen::random_tame(rng, p, 3, 6).value;
    Auto b = testgen::random_tame(rng, p, 3, 6).value;
    Jacobian ja = jacobian(a), jb = jacobian(b), jab = jacobian(a * b);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) {
        BiPoly want = sub2(jb.m[r][0], a) * ja.m[0][c] +
                      sub2(jb.m[r][1], a) * ja.m[1][c];
        CHECK(jab.m[r][c] == want);
      }
    CHECK(jab.det() == sub2(jb.det(), a) * ja.det());
  }
}

TEST_CASE("classification ladder") {
  int p = 3;
  RingTag R = RingTag::R;
  BiPoly x = BiPoly::x(p, R), y = BiPoly::y(p, R), one = BiPoly::one(p, R);

  ClassFlags tr = classify(Auto(x + one, y + one));
  CHECK(tr.translation);
  CHECK(tr.affine);
  CHECK_FALSE(tr.linear);
  CHECK(tr.triangular);
  CHECK(tr.diff_affine);

  ClassFlags sw = classify(Auto::transposition(p, R));
  CHECK(sw.linear);
  CHECK(sw.affine);
  CHECK(sw.additive);
  CHECK_FALSE(sw.triangular);
  CHECK_FALSE(sw.translation);

  ClassFlags el = classify(shear_y2(p, R));
  CHECK(el.elementary);
  CHECK(el.triangular);
  CHECK_FALSE(el.affine);
  CHECK_FALSE(el.additive);
  CHECK_FALSE(el.diff_affine);  // d(y^2) = 2y is not constant
  CHECK_FALSE(el.geom_affine);

  // exponent p: additive, geometric, differential all hold
  Auto frob = make_shear(p, R, {{3, RatFunc::one(p)}});
  ClassFlags fr = classify(frob);
  CHECK(fr.additive);
  CHECK(fr.geom_affine);
  CHECK(fr.diff_affine);
  CHECK_FALSE(fr.affine);

  // exponent 2p: differentially but not geometrically affine
  Auto d6 = make_shear(p, R, {{6, RatFunc::one(p)}});
  ClassFlags df = classify(d6);
  CHECK(df.diff_affine);
  CHECK_FALSE(df.geom_affine);
  CHECK_FALSE(df.additive);

  // non-invertible linear part is not affine over either ring
  ClassFlags ns = classify(Auto(x + y, x + y));
  CHECK_FALSE(ns.affine);
  CHECK_FALSE(ns.linear);
}

TEST_CASE("unit requirements follow the ring tag") {
  int p = 3;
  RatFunc t(TPoly::t(p));
  BiPoly xK = BiPoly::x(p, RingTag::K), yK = BiPoly::y(p, RingTag::K);
  Auto scale(xK * t, yK);
  CHECK(as_triangular(scale).has_value());
  CHECK(as_affine(scale).has_value());
  CHECK(classify(scale).linear);

  Auto scaleR = scale.view_over(RingTag::R);
  CHECK_FALSE(as_triangular(scaleR).has_value());
  CHECK_FALSE(as_affine(scaleR).has_value());
  CHECK_FALSE(classify(scaleR).linear);

  CHECK(is_ring_unit(t, RingTag::K));
  CHECK_FALSE(is_ring_unit(t, RingTag::R));
  CHECK(is_ring_unit(RatFunc::constant(Scalar(2, p)), RingTag::R));
  CHECK_FALSE(is_ring_unit(RatFunc::zero(p), RingTag::K));
}

TEST_CASE("triangular and affine forms round trip") {
  int p = 5;
  TriangularForm tf{RatFunc::constant(Scalar(2, p)),
                    {{0, RatFunc(TPoly::t(p))},
                     {3, RatFunc::constant(Scalar(4, p))}},
                    RatFunc::constant(Scalar(3, p)),
                    RatFunc::one(p)};
  Auto b = make_triangular(p, RingTag::R, tf);
  auto back = as_triangular(b);
  REQUIRE(back.has_value());
  CHECK(back->u == tf.u);
  CHECK(back->v == tf.v);
  CHECK(back->w == tf.w);
  CHECK(back->shear == tf.shear);

  AffineForm af{{{RatFunc::one(p), RatFunc::constant(Scalar(2, p))},
                 {RatFunc::constant(Scalar(3, p)), RatFunc::constant(Scalar(2, p))}},
                {RatFunc(TPoly::t(p)), RatFunc::zero(p)}};
  REQUIRE_FALSE(af.det().is_zero());
  Auto a = make_affine(p, RingTag::R, af);
  auto aback = as_affine(a);
  REQUIRE(aback.has_value());
  for (int r = 0; r < 2; ++r) {
    CHECK(aback->b[r] == af.b[r]);
    for (int c = 0; c < 2; ++c) CHECK(aback->m[r][c] == af.m[r][c]);
  }
  CHECK_FALSE(as_affine(shear_y2(p, RingTag::R)).has_value());
  CHECK_FALSE(as_triangular(Auto::transposition(p, RingTag::R)).has_value());
}

TEST_CASE("closed-form inverses") {
  int p = 5;
  testgen::Rng rng(7);
  Auto id = Auto::identity(p, RingTag::K);
  for (int it = 0; it < 10; ++it) {
    Auto a = testgen::r_affine(rng, p);
    CHECK(a * invert(a) == id);
    CHECK(invert(a) * a == id);
  }
  for (int it = 0; it < 10; ++it) {
    Auto b = testgen::r_triangular_in(rng, p, PStableSet::all_ge2(p), 5);
    CHECK(b * invert(b) == id);
    CHECK(invert(b) * b == id);
  }
  // R-tagged inverse of an R-automorphism stays over R
  Auto sh = shear_y2(p, RingTag::R);
  Auto inv = invert(sh);
  CHECK(inv.tag() == RingTag::R);
  CHECK(sh * inv == Auto::identity(p, RingTag::R));
  // (t x, y) is invertible over K only
  Auto scale(BiPoly::x(p, RingTag::R) * RatFunc(TPoly::t(p)),
             BiPoly::y(p, RingTag::R));
  CHECK_THROWS_AS(invert(scale), std::domain_error);
  CHECK(invert(scale.view_over(RingTag::K)).f1() ==
        BiPoly::x(p, RingTag::K) * RatFunc(TPoly::one(p), TPoly::t(p)));
}
