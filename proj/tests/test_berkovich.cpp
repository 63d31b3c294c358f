#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "berktree/berkovich.hpp"
#include "berktree/poly_text.hpp"
#include "berktree/sampling.hpp"
#include "test_util.hpp"

using namespace berktree;
using namespace berktree::testutil;

namespace {

KPoly random_kpoly(Rng& rng, const ExtField& K, int max_deg) {
  std::vector<FieldElt> c;
  int d = static_cast<int>(rng.uniform(0, max_deg));
  for (int i = 0; i <= d; ++i) c.push_back(random_element(rng, K, -2, 3));
  return KPoly(K, std::move(c));
}

}  // namespace

TEST_CASE("eta and point types") {
  ExtField K = Q2_sqrt2();
  BerkPoint gauss = eta(Q2().zero(), AV(0));
  CHECK(point_type(gauss) == PointType::type2);

  BerkPoint meet = eta(K.generator(), AV(3, 2));
  CHECK(point_type(meet) == PointType::type2);

  BerkPoint rational = eta(Q3().from_rational(Rational(5)), AbsValue::zero());
  CHECK(point_type(rational) == PointType::type1);
  CHECK(rational.is_type1());
}

TEST_CASE("ball identity") {
  ExtField K = Q2_sqrt2();
  // E(alpha, 2^(-1/2)) = E(0, 2^(-1/2)) since |alpha| = 2^(-1/2).
  CHECK(eta(K.generator(), AV(1, 2)) == eta(K.zero(), AV(1, 2)));
  CHECK(eta(K.generator(), AV(1)) != eta(K.zero(), AV(1)));  // |alpha| = 2^(-1/2) > 2^(-1)
  // Type-1 points are equal only at equal centers.
  CHECK(eta(K.generator(), AbsValue::zero()) != eta(K.zero(), AbsValue::zero()));
  CHECK(eta(K.generator(), AbsValue::zero()) == eta(K.generator(), AbsValue::zero()));
}

TEST_CASE("containment order") {
  ExtField Q = Q2();
  CHECK(leq(eta(Q.zero(), AV(1)), eta(Q.zero(), AV(0))));       // E(0,1/2) inside E(0,1)
  CHECK(leq(eta(Q.zero(), AV(0)), eta(Q.zero(), AV(0))));       // reflexive
  CHECK_FALSE(leq(eta(Q.one(), AV(2)), eta(Q.zero(), AV(1))));  // |1-0| = 1 > 1/2

  // Cross-context comparisons along the declared tower.
  ExtField K = Q2_sqrt2();
  CHECK(leq(eta(K.generator(), AbsValue::zero()), eta(Q.zero(), AV(1, 2))));
  CHECK_THROWS_AS(leq(eta(K.zero(), AV(0)), eta(field(2, "T^3 - 2").zero(), AV(0))),
                  std::invalid_argument);
  CHECK_THROWS_AS(leq(eta(Q.zero(), AV(0)), eta(Q3().zero(), AV(0))), std::invalid_argument);
}

TEST_CASE("join of the conjugate roots of T^2 - 2") {
  ExtField K = Q2_sqrt2();
  FieldElt a = K.generator();
  BerkPoint meet = join(eta(a, AbsValue::zero()), eta(-a, AbsValue::zero()));
  CHECK(meet == eta(a, AV(3, 2)));  // |a - (-a)| = |2 alpha| = 2^(-3/2)

  BerkPoint x = eta(K.one() + a, AV(2));
  CHECK(join(x, x) == x);

  BerkPoint z = join(eta(Q2().zero(), AbsValue::zero()), eta(Q2().one(), AbsValue::zero()));
  CHECK(z == eta(Q2().zero(), AV(0)));  // |0 - 1| = 1: the Gauss point
}

TEST_CASE("lattice laws on random ball families") {
  Rng rng(31);
  for (const auto& K : {Q2_sqrt2(), Q3_sqrt3(), field(2, "T^3 - 2")}) {
    for (int trial = 0; trial < 120; ++trial) {
      BerkPoint x = random_ball_point(rng, K, true);
      BerkPoint y = random_ball_point(rng, K, true);
      BerkPoint z = random_ball_point(rng, K, true);

      CHECK(leq(x, x));
      if (leq(x, y) && leq(y, x)) CHECK(x == y);
      if (leq(x, y) && leq(y, z)) CHECK(leq(x, z));

      BerkPoint j = join(x, y);
      CHECK(leq(x, j));
      CHECK(leq(y, j));
      if (leq(x, z) && leq(y, z)) CHECK(leq(j, z));
    }
  }
}

TEST_CASE("gauss seminorm evaluation") {
  ExtField Q = Q2();
  KPoly f = KPoly::lift(parse_poly("T^2 + 2", "T"), Q);
  CHECK(seminorm_eval(f, eta(Q.zero(), AV(1, 2))) == AV(1));  // tie of (2^(-1/2))^2 and |2|

  ExtField K = Q2_sqrt2();
  KPoly c = KPoly::lift(parse_poly("24", "T"), K);
  CHECK(seminorm_eval(c, eta(K.generator(), AV(7, 3))) == AV(3));

  KPoly xa(K, {-K.generator(), K.one()});  // X - alpha
  CHECK(seminorm_eval(xa, eta(K.generator(), AbsValue::zero())) == AbsValue::zero());

  // A base-field polynomial lifts into the point's context: at the type-1
  // point alpha, f(alpha) = alpha^2 + 2 = 4.
  CHECK(seminorm_eval(f, eta(K.generator(), AbsValue::zero())) == AV(2));
}

TEST_CASE("seminorm laws on random data") {
  Rng rng(77);
  for (const auto& K : {Q2(), Q3(), Q2_sqrt2()}) {
    std::vector<BerkPoint> points;
    for (int i = 0; i < 15; ++i) points.push_back(random_ball_point(rng, K, true));
    for (int trial = 0; trial < 80; ++trial) {
      KPoly f = random_kpoly(rng, K, 4);
      KPoly g = random_kpoly(rng, K, 4);
      const BerkPoint& x = points[static_cast<size_t>(rng.uniform(0, 14))];

      CHECK(seminorm_eval(f * g, x) == seminorm_eval(f, x) * seminorm_eval(g, x));

      AbsValue vf = seminorm_eval(f, x);
      AbsValue vg = seminorm_eval(g, x);
      AbsValue vsum = seminorm_eval(f + g, x);
      CHECK(vsum <= max(vf, vg));
      if (vf != vg) CHECK(vsum == max(vf, vg));
    }
  }
}

TEST_CASE("seminorm against independent routes") {
  Rng rng(555);
  ExtField K = Q2_sqrt2();
  for (int trial = 0; trial < 60; ++trial) {
    KPoly f = random_kpoly(rng, K, 4);
    FieldElt a = random_element(rng, K, -2, 3);

    // Type-1 points evaluate: the Gauss formula must collapse to |f(a)|.
    CHECK(seminorm_eval(f, eta(a, AbsValue::zero())) == abs_value(f.eval(a)));

    // Recentering inside the same ball leaves the seminorm unchanged.
    BerkPoint x = random_ball_point(rng, K, false);
    FieldElt shift = random_element(rng, K, -2, 3);
    if (abs_value(shift) <= x.radius()) {
      BerkPoint y = eta(x.center() + shift, x.radius());
      REQUIRE(x == y);
      CHECK(seminorm_eval(f, x) == seminorm_eval(f, y));
    }
  }
}

TEST_CASE("ball identity across embedded contexts") {
  // The Gauss point over the base equals the Gauss point over the extension.
  CHECK(eta(Q2().zero(), AV(0)) == eta(Q2_sqrt2().zero(), AV(0)));
  CHECK(eta(Q2().one(), AV(1)) == eta(Q2_sqrt2().one(), AV(1)));
  // |alpha| = 2^(-1/2) lies inside the unit ball but not inside E(0, 2^(-1)).
  CHECK(eta(Q2().zero(), AV(0)) == eta(Q2_sqrt2().generator(), AV(0)));
  CHECK(eta(Q2().zero(), AV(1)) != eta(Q2_sqrt2().generator(), AV(1)));
}

TEST_CASE("seminorm is monotone in the order") {
  Rng rng(123);
  ExtField K = Q2_sqrt2();
  for (int trial = 0; trial < 100; ++trial) {
    BerkPoint x = random_ball_point(rng, K, true);
    BerkPoint y = random_ball_point(rng, K, true);
    if (!leq(x, y)) continue;
    KPoly f = random_kpoly(rng, K, 4);
    CHECK(seminorm_eval(f, x) <= seminorm_eval(f, y));
  }
}

TEST_CASE("path parametrization is order preserving") {
  Rng rng(9);
  ExtField K = Q3_sqrt3();
  for (int trial = 0; trial < 60; ++trial) {
    FieldElt a = random_element(rng, K, -2, 3);
    Valuation q1(make_rational(rng.uniform(-6, 6), rng.uniform(1, 3)));
    Valuation q2(make_rational(rng.uniform(-6, 6), rng.uniform(1, 3)));
    AbsValue r1 = AbsValue::from_exponent(q1);
    AbsValue r2 = AbsValue::from_exponent(q2);
    if (r1 <= r2) CHECK(leq(eta(a, r1), eta(a, r2)));
    CHECK(join(eta(a, r1), eta(a, r2)) == eta(a, max(r1, r2)));
  }
}

TEST_CASE("open ball membership") {
  ExtField K = Q2_sqrt2();
  FieldElt a = K.generator();
  CHECK(in_open_ball(-a, a, abs_value(a)));  // |(-a) - a| = 2^(-3/2) < 2^(-1/2)
  CHECK(in_open_ball(a, a, AV(5)));
  CHECK_FALSE(in_open_ball(K.zero(), a, abs_value(a)));  // |0 - a| equals the radius
  CHECK_FALSE(in_open_ball(K.zero(), a, AbsValue::zero()));
}
