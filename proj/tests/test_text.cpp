#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "autxy/text.hpp"
#include "support/generators.hpp"

using namespace autxy;

TEST_CASE("polynomial expressions") {
  int p = 3;
  CHECK(parse_tpoly("t^2 + 2t + 1", p) == TPoly::from_ints({1, 2, 1}, p));
  CHECK(parse_tpoly("(t+1)^2", p) == TPoly::from_ints({1, 2, 1}, p));
  CHECK(parse_tpoly("t*t*t", p) == TPoly::from_ints({0, 0, 0, 1}, p));
  CHECK(parse_tpoly("0", p) == TPoly::zero(p));
  CHECK(parse_tpoly("5", p) == TPoly::constant(Scalar(2, p)));
  CHECK(parse_tpoly("-t", p) == -TPoly::t(p));
  CHECK(parse_tpoly("2(t+1) - 2t", p) == TPoly::constant(Scalar(2, p)));

  RatFunc r = parse_ratfunc("(t^2+1)/t", p);
  CHECK(r.num() == TPoly::from_ints({1, 0, 1}, p));
  CHECK(r.den() == TPoly::t(p));
  CHECK(parse_ratfunc("t/1", p) == RatFunc(TPoly::t(p)));

  RPoly q = parse_rpoly("y^2 t + y + 1", p);
  CHECK(q.coeff(2) == TPoly::t(p));
  CHECK(q.coeff(1) == TPoly::one(p));
  CHECK(q.coeff(0) == TPoly::one(p));

  BiPoly f = parse_bipoly("x^2 y + t x/t + 2", p, RingTag::K);
  CHECK(f.coeff(2, 1).is_one());
  CHECK(f.coeff(1, 0).is_one());
  CHECK(f.coeff(0, 0) == RatFunc::constant(Scalar(2, p)));
}

TEST_CASE("parse errors carry a position") {
  int p = 3;
  CHECK_THROWS_AS(parse_tpoly("t +", p), ParseError);
  CHECK_THROWS_AS(parse_tpoly("(t", p), ParseError);
  CHECK_THROWS_AS(parse_tpoly("t^-2", p), ParseError);
  CHECK_THROWS_AS(parse_tpoly("w", p), ParseError);
  CHECK_THROWS_AS(parse_tpoly("x", p), ParseError);       // not in R
  CHECK_THROWS_AS(parse_ratfunc("x/t", p), ParseError);
  CHECK_THROWS_AS(parse_rpoly("x + y", p), ParseError);   // x not allowed
  CHECK_THROWS_AS(parse_bipoly("x/y", p, RingTag::K), ParseError);
  CHECK_THROWS_AS(parse_bipoly("1/0", p, RingTag::K), ParseError);
  CHECK_THROWS_AS(parse_bipoly("x/t", p, RingTag::R), ParseError);
  CHECK_THROWS_AS(parse_bipoly("x^5000", p, RingTag::K), ParseError);

  try {
    parse_tpoly("t + % + 1", 3);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.pos == 4);
    CHECK(std::string(e.what()).find("at offset 4") != std::string::npos);
  }
}

TEST_CASE("automorphism and word syntax") {
  int p = 3;
  Auto a = parse_auto("x -> x + t*y^2 ; y -> y", p, RingTag::R);
  CHECK(a == make_shear(p, RingTag::R, {{2, RatFunc(TPoly::t(p))}}));
  CHECK(parse_auto("x -> y; y -> x", p, RingTag::K) ==
        Auto::transposition(p, RingTag::K));

  Word w = parse_word("B: x -> x + y^2; y -> y; A: x -> y; y -> x", p);
  REQUIRE(w.size() == 2);
  CHECK(w.letters[0].tag == LetterTag::B);
  CHECK(w.letters[1].tag == LetterTag::A);
  CHECK(w.letters[0].value ==
        make_shear(p, RingTag::K, {{2, RatFunc::one(p)}}));
  CHECK(w.letters[1].value == Auto::transposition(p, RingTag::K));

  CHECK_THROWS_AS(parse_auto("x -> x", p, RingTag::R), ParseError);
  CHECK_THROWS_AS(parse_auto("y -> x; x -> y", p, RingTag::R), ParseError);
  CHECK_THROWS_AS(parse_word("x -> x; y -> y", p), ParseError);
  CHECK_THROWS_AS(parse_word("B:", p), ParseError);
}

TEST_CASE("exponent set syntax") {
  int p = 2;
  CHECK(parse_pset("ppowers", p).kind() == PStableSet::Kind::PPowers);
  CHECK(parse_pset("pmult", p).kind() == PStableSet::Kind::PMultiples);
  CHECK(parse_pset("empty", p).kind() == PStableSet::Kind::Empty);
  CHECK(parse_pset("all", p).kind() == PStableSet::Kind::AllGe2);
  CHECK(parse_pset("{2, 4, 5}", p).materialize() ==
        std::vector<long long>{2, 4, 5});
  CHECK(parse_pset("2..6", p).kind() == PStableSet::Kind::RangeTo);
  CHECK(parse_pset("2..6", p).contains(6));
  CHECK(parse_pset("3..5", p).materialize() == std::vector<long long>{3, 4, 5});
  CHECK(parse_pset("pscaled(2, 3)", p).materialize() ==
        std::vector<long long>{4, 8, 12});
  CHECK(parse_pset("pscaledall(1)", p).contains(6));
  CHECK(parse_pset("ppowerpair(2)", p).materialize() ==
        std::vector<long long>{4, 5});

  PStableSet u = parse_pset("ppowers | {6}", p);
  CHECK(u.contains(6));
  CHECK(u.contains(8));
  PStableSet i = parse_pset("ppowers & 2..10 | {6}", p);  // & binds tighter
  CHECK(i.contains(6));
  CHECK(i.contains(8));
  CHECK_FALSE(i.contains(16));

  CHECK_THROWS_AS(parse_pset("widgets", p), ParseError);
  CHECK_THROWS_AS(parse_pset("{1, 2}", p), ParseError);  // 1 is never admitted
  CHECK_THROWS_AS(parse_pset("5..3", p), ParseError);
}

TEST_CASE("frozen canonical forms") {
  int p = 3;
  CHECK(str(TPoly::from_ints({1, 2, 1}, p)) == "t^2+2*t+1");
  CHECK(str(TPoly::zero(p)) == "0");
  CHECK(str(TPoly::from_ints({0, 0, 2}, p)) == "2*t^2");
  CHECK(str(RatFunc(TPoly::from_ints({1, 1}, p), TPoly::t(p))) == "(t+1)/t");
  CHECK(str(RatFunc(TPoly::t(p))) == "t");

  Auto sh = make_shear(p, RingTag::R, {{2, RatFunc(TPoly::t(p))}});
  CHECK(str(sh) == "x -> t*y^2+x; y -> y");
  CHECK(str(Auto::transposition(p, RingTag::R)) == "x -> y; y -> x");

  BiPoly f = parse_bipoly("x^2 + x*y + t", p, RingTag::R);
  CHECK(str(f) == "x^2+x*y+t");

  Word w{{Letter{LetterTag::B, sh.view_over(RingTag::K)},
          Letter{LetterTag::A, Auto::transposition(p, RingTag::K)}}};
  CHECK(str(w) == "B: x -> t*y^2+x; y -> y;  A: x -> y; y -> x");
}

TEST_CASE("printers round trip through the parsers") {
  testgen::Rng rng(314);
  for (int p : {2, 3, 5}) {
    for (int it = 0; it < 40; ++it) {
      TPoly tp = TPoly::monomial(testgen::rscalar_nonzero(rng, p),
                                 static_cast<int>(testgen::rint(rng, 0, 4))) +
                 TPoly::from_ints({testgen::rint(rng, 0, p - 1),
                                   testgen::rint(rng, 0, p - 1)},
                                  p);
      CHECK(parse_tpoly(str(tp), p) == tp);

      RatFunc rf = testgen::rcoeff(rng, p);
      CHECK(parse_ratfunc(str(rf), p) == rf);

      BiPoly bp(p, RingTag::K);
      int terms = static_cast<int>(testgen::rint(rng, 0, 5));
      for (int k = 0; k < terms; ++k)
        bp.add_term(testgen::rcoeff(rng, p),
                    static_cast<int>(testgen::rint(rng, 0, 4)),
                    static_cast<int>(testgen::rint(rng, 0, 4)));
      CHECK(parse_bipoly(str(bp), p, RingTag::K) == bp);

      Auto a = testgen::random_tame(rng, p, 3, 8).value;
      CHECK(parse_auto(str(a), p, RingTag::K) == a);
    }
  }
  // p = 0 rationals survive as well
  TPoly q = TPoly::constant(Scalar::fraction(-3, 4, 0)) + TPoly::t(0);
  CHECK(parse_tpoly(str(q), 0) == q);
}

TEST_CASE("word strings round trip") {
  testgen::Rng rng(8);
  int p = 3;
  for (int it = 0; it < 10; ++it) {
    DecomposeResult r = decompose(testgen::random_tame(rng, p).value);
    REQUIRE(r.status == DecomposeStatus::Ok);
    if (r.word.empty()) continue;
    Word back = parse_word(str(r.word), p);
    REQUIRE(back.size() == r.word.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
      CHECK(back.letters[i].tag == r.word.letters[i].tag);
      CHECK(back.letters[i].value == r.word.letters[i].value);
    }
  }
}
