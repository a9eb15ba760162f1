#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "autxy/pstable.hpp"
#include "autxy/text.hpp"
#include "support/generators.hpp"

using namespace autxy;

TEST_CASE("binomials mod p by digits") {
  // against an actual Pascal triangle
  for (int p : {2, 3, 5, 7}) {
    std::vector<std::vector<long long>> row{{1}};
    for (int n = 0; n <= 40; ++n) {
      for (int k = 0; k <= n; ++k)
        CHECK(binom_mod_p(n, k, p) == row[static_cast<std::size_t>(n)]
                                         [static_cast<std::size_t>(k)]);
      std::vector<long long> next(static_cast<std::size_t>(n) + 2, 1);
      for (int k = 1; k <= n; ++k)
        next[static_cast<std::size_t>(k)] =
            (row[static_cast<std::size_t>(n)][static_cast<std::size_t>(k - 1)] +
             row[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]) %
            p;
      row.push_back(next);
    }
  }
  CHECK(binom_mod_p(10, 4, 3) == 0);   // 210 = 0 mod 3
  CHECK(binom_mod_p(10, 1, 3) == 1);   // 10 = 1 mod 3
  CHECK(binom_mod_p(7, 3, 2) == 1);    // 35 is odd
  CHECK(binom_mod_p(5, 2, 5) == 0);    // 10 = 0 mod 5
  CHECK(binom_mod_p(0, 0, 2) == 1);
  CHECK(binom_mod_p(3, 5, 2) == 0);    // k > n
}

TEST_CASE("support of (y+1)^n") {
  CHECK(expand_binomial_support(6, 2) == std::set<long long>{0, 2, 4, 6});
  CHECK(expand_binomial_support(4, 2) == std::set<long long>{0, 4});
  CHECK(expand_binomial_support(5, 3) == std::set<long long>{0, 1, 2, 3, 4, 5});
  CHECK(expand_binomial_support(9, 3) == std::set<long long>{0, 9});
  CHECK(expand_binomial_support(0, 5) == std::set<long long>{0});
  // agreement with the digit formula
  for (int p : {2, 3}) {
    for (long long n = 0; n <= 32; ++n) {
      std::set<long long> s = expand_binomial_support(n, p);
      for (long long k = 0; k <= n; ++k)
        CHECK(s.count(k) == (binom_mod_p(n, k, p) != 0 ? 1 : 0));
    }
  }
}

TEST_CASE("exponent set families") {
  PStableSet pm = PStableSet::p_multiples(3);
  CHECK(pm.contains(3));
  CHECK(pm.contains(12));
  CHECK_FALSE(pm.contains(4));
  CHECK_FALSE(pm.materialize().has_value());

  PStableSet pp = PStableSet::p_powers(2);
  CHECK(pp.contains(2));
  CHECK(pp.contains(64));
  CHECK_FALSE(pp.contains(6));
  CHECK_FALSE(pp.contains(1));

  PStableSet fin = PStableSet::finite({2, 5, 9}, 7);
  CHECK(fin.contains(5));
  CHECK_FALSE(fin.contains(3));
  CHECK(fin.materialize() == std::vector<long long>{2, 5, 9});

  PStableSet rng = PStableSet::range_to(6, 5);
  CHECK(rng.contains(2));
  CHECK(rng.contains(6));
  CHECK_FALSE(rng.contains(7));
  CHECK(rng.materialize() == std::vector<long long>{2, 3, 4, 5, 6});

  PStableSet sr = PStableSet::scaled_range(2, 3, 2);  // 4 * {1,2,3}
  CHECK(sr.contains(4));
  CHECK(sr.contains(12));
  CHECK_FALSE(sr.contains(16));
  CHECK(sr.materialize() == std::vector<long long>{4, 8, 12});

  PStableSet sa = PStableSet::scaled_all(1, 3);  // 3 * {1,2,...}
  CHECK(sa.contains(3));
  CHECK(sa.contains(300));
  CHECK_FALSE(sa.contains(4));
  CHECK_FALSE(sa.materialize().has_value());

  PStableSet pair = PStableSet::p_power_pair(2, 3);  // {9, 10}
  CHECK(pair.materialize() == std::vector<long long>{9, 10});

  PStableSet all = PStableSet::all_ge2(2);
  CHECK(all.contains(2));
  CHECK(all.contains(1000));
  CHECK_FALSE(all.contains(1));

  CHECK_FALSE(PStableSet::empty(2).contains(2));
  CHECK(PStableSet::empty(2).materialize() == std::vector<long long>{});

  PStableSet u = PStableSet::union_of({pp, PStableSet::finite({5}, 2)});
  CHECK(u.contains(5));
  CHECK(u.contains(8));
  CHECK_FALSE(u.contains(6));
  PStableSet in = PStableSet::intersection_of(
      {PStableSet::p_powers(2), PStableSet::range_to(9, 2)});
  CHECK(in.contains(8));
  CHECK_FALSE(in.contains(16));
}

TEST_CASE("stability of finite sets matches the expansion check") {
  // {3} is not 2-stable: (y+1)^3 has y^2 in its support
  StabilityReport r = is_p_stable(PStableSet::finite({3}, 2));
  CHECK_FALSE(r.stable);
  CHECK(r.exact);
  REQUIRE(r.counterexample.has_value());
  CHECK(*r.counterexample == std::pair<long long, long long>{3, 2});

  CHECK(is_p_stable(PStableSet::finite({2}, 2)).stable);
  CHECK(is_p_stable(PStableSet::finite({2, 3}, 2)).stable);
  CHECK(is_p_stable(PStableSet::finite({3}, 3)).stable);
  CHECK_FALSE(is_p_stable(PStableSet::finite({4}, 3)).stable);
  CHECK(is_p_stable(PStableSet::finite({3, 4}, 3)).stable);

  // every subset of {2..8}, both small characteristics
  for (int p : {2, 3}) {
    for (int mask = 1; mask < 128; ++mask) {
      std::set<long long> elems;
      for (int b = 0; b < 7; ++b)
        if (mask & (1 << b)) elems.insert(b + 2);
      PStableSet I = PStableSet::finite(elems, p);
      bool direct = true;
      for (long long n : elems)
        for (long long k : expand_binomial_support(n, p))
          if (k >= 2 && !elems.count(k)) direct = false;
      CHECK(is_p_stable(I).stable == direct);
    }
  }
}

TEST_CASE("symbolic families carry certificates") {
  for (int p : {2, 3, 5}) {
    for (const PStableSet& I :
         {PStableSet::empty(p), PStableSet::p_powers(p),
          PStableSet::p_multiples(p), PStableSet::all_ge2(p),
          PStableSet::range_to(7, p), PStableSet::scaled_range(1, 5, p),
          PStableSet::scaled_all(2, p), PStableSet::p_power_pair(1, p)}) {
      StabilityReport r = is_p_stable(I);
      CHECK(r.stable);
      CHECK(r.exact);
      CHECK_FALSE(r.certificate.empty());
      // independent bounded audit
      CHECK_FALSE(stability_counterexample(I, 200).has_value());
    }
  }
}

TEST_CASE("combinations of stable sets") {
  // union and intersection of certified sets stay certified
  StabilityReport u = is_p_stable(PStableSet::union_of(
      {PStableSet::p_powers(2), PStableSet::p_multiples(2)}));
  CHECK(u.stable);
  CHECK(u.exact);
  StabilityReport n = is_p_stable(PStableSet::intersection_of(
      {PStableSet::p_multiples(2), PStableSet::all_ge2(2)}));
  CHECK(n.stable);
  CHECK(n.exact);

  // a union with an unstable finite part falls back to the bounded audit
  StabilityReport m = is_p_stable(PStableSet::union_of(
      {PStableSet::p_powers(2), PStableSet::finite({3}, 2)}));
  CHECK(m.stable);
  CHECK_FALSE(m.exact);
  CHECK(m.audit_bound == 200);
}

TEST_CASE("triangular membership with a factorization witness") {
  int p = 3;
  Auto beta = parse_auto("x -> 2x + y + y^6 + 1; y -> 2y + 1", p, RingTag::K);

  TriangularSplit s = triangular_in_AI(beta, PStableSet::p_multiples(p));
  REQUIRE(s.in_subgroup);
  REQUIRE(s.shear_part.has_value());
  REQUIRE(s.affine_part.has_value());
  CHECK(*s.shear_part == parse_auto("x -> x + 2y^6; y -> y", p, RingTag::K));
  CHECK(*s.affine_part == parse_auto("x -> 2x + y + 1; y -> 2y + 1", p, RingTag::K));
  CHECK(*s.shear_part * *s.affine_part == beta);

  TriangularSplit f = triangular_in_AI(beta, PStableSet::p_powers(p));
  CHECK_FALSE(f.in_subgroup);
  CHECK(f.offending_exponent == 6);

  CHECK_THROWS_WITH(
      triangular_in_AI(Auto::transposition(p, RingTag::K),
                       PStableSet::p_powers(p)),
      "triangular element required");
}

TEST_CASE("stable sets are closed under right affine multiplication") {
  testgen::Rng rng(31);
  for (int p : {2, 3}) {
    for (const PStableSet& I :
         {PStableSet::p_powers(p), PStableSet::p_multiples(p),
          PStableSet::finite({static_cast<long long>(p),
                              static_cast<long long>(p) + 1}, p)}) {
      REQUIRE(is_p_stable(I).stable);
      for (int it = 0; it < 6; ++it) {
        Auto alpha = testgen::r_affine_triangular(rng, p);
        Auto beta = testgen::r_triangular_in(rng, p, I);
        TriangularSplit s = triangular_in_AI(alpha * beta, I);
        REQUIRE(s.in_subgroup);
        CHECK(*s.shear_part * *s.affine_part == alpha * beta);
      }
    }
  }
  // and an unstable set is not
  Auto shift = make_triangular(2, RingTag::K,
                               {RatFunc::one(2), {}, RatFunc::one(2),
                                RatFunc::one(2)});  // (x, y + 1)
  Auto cube = make_shear(2, RingTag::K, {{3, RatFunc::one(2)}});
  TriangularSplit bad =
      triangular_in_AI(shift * cube, PStableSet::finite({3}, 2));
  CHECK_FALSE(bad.in_subgroup);
  CHECK(bad.offending_exponent == 2);
}

TEST_CASE("containment order with witnesses") {
  SubsetReport r = ai_order(PStableSet::p_powers(3), PStableSet::p_multiples(3));
  CHECK(r.subset);
  CHECK_FALSE(r.exact);
  CHECK(r.bound == 200);

  SubsetReport w = ai_order(PStableSet::p_multiples(3), PStableSet::p_powers(3));
  CHECK_FALSE(w.subset);
  REQUIRE(w.witness.has_value());
  CHECK(*w.witness == 6);

  SubsetReport e = ai_order(PStableSet::empty(2), PStableSet::p_powers(2));
  CHECK(e.subset);
  CHECK(e.exact);

  SubsetReport f =
      ai_order(PStableSet::finite({4, 8}, 2), PStableSet::p_powers(2));
  CHECK(f.subset);
  CHECK(f.exact);

  SubsetReport g =
      ai_order(PStableSet::all_ge2(2), PStableSet::p_multiples(2));
  CHECK_FALSE(g.subset);
  CHECK(*g.witness == 3);
}
