#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "berktree/json_io.hpp"
#include "berktree/poly_text.hpp"
#include "berktree/sampling.hpp"
#include "test_util.hpp"

using namespace berktree;
using namespace berktree::testutil;

TEST_CASE("polynomial grammar") {
  RatPoly f = parse_poly("T^2 - 2");
  CHECK(f.degree() == 2);
  CHECK(f.coeff(0) == -2);
  CHECK(f.coeff(2) == 1);
  CHECK(format_poly(f) == "T^2 - 2");

  RatPoly g = parse_poly("T^3 + 2/3*T - 6");
  CHECK(g.coeff(1) == make_rational(2, 3));
  CHECK(format_poly(g) == "T^3 + 2/3*T - 6");

  CHECK(parse_poly("-T + 1") == parse_poly("1 - T"));
  CHECK(parse_poly("T*T*T") == parse_poly("T^3"));
  CHECK(parse_poly("  T ^ 2  -  2 ") == f);
  CHECK(format_poly(RatPoly()) == "0");
  CHECK(format_poly(parse_poly("0")) == "0");
  CHECK(parse_poly("2*T + 3*T") == parse_poly("5*T"));

  CHECK_THROWS_AS(parse_poly("T^-1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("U^2 - 2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("T^2 -"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly(""), std::invalid_argument);

  // Round trip on random polynomials.
  Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    std::vector<Rational> c;
    int d = static_cast<int>(rng.uniform(0, 5));
    for (int i = 0; i <= d; ++i)
      c.push_back(rng.uniform(0, 3) == 0 ? Rational(0) : random_rational(rng, 2, -2, 2));
    RatPoly h(std::move(c));
    CHECK(parse_poly(format_poly(h)) == h);
  }
}

TEST_CASE("element grammar") {
  ExtField K = Q2_sqrt2();
  FieldElt x = parse_element("1 + alpha", K);
  CHECK(x == K.one() + K.generator());
  CHECK(format_element(x) == "alpha + 1");
  CHECK(parse_element("alpha^2", K) == K.from_rational(Rational(2)));  // reduced mod T^2 - 2
  CHECK(parse_element("-3/4", K) == K.from_rational(make_rational(-3, 4)));
  CHECK(parse_element(format_element(x), K) == x);
}

TEST_CASE("laurent grammar") {
  LaurentPoly f = parse_laurent("3*x1^2*x2^-1 + 1/2", 2);
  CHECK(f.terms().size() == 2);
  CHECK(format_laurent(f) == "1/2 + 3*x1^2*x2^-1");
  CHECK(parse_laurent(format_laurent(f), 2) == f);
  CHECK(parse_laurent("x1*x1", 1) == parse_laurent("x1^2", 1));
  CHECK_THROWS_AS(parse_laurent("x3", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_laurent("y1", 2), std::invalid_argument);

  // Round trip over random Laurent polynomials (negative coefficients and
  // exponents included).
  Rng rng(23);
  for (int t = 0; t < 50; ++t) {
    std::vector<LaurentTerm> terms;
    int n = static_cast<int>(rng.uniform(1, 4));
    for (int i = 0; i < n; ++i) {
      std::vector<long> u{rng.uniform(-3, 3), rng.uniform(-3, 3)};
      terms.push_back(LaurentTerm{std::move(u), random_rational(rng, 3, -2, 2)});
    }
    LaurentPoly g(2, std::move(terms));
    if (g.is_zero()) continue;
    CHECK(parse_laurent(format_laurent(g), 2) == g);
  }
}

TEST_CASE("valuation literals") {
  CHECK(parse_valuation("3/2") == V(3, 2));
  CHECK(parse_valuation("-1") == V(-1));
  CHECK(parse_valuation("inf").is_infinite());
  CHECK(parse_valuation(" 0 ") == V(0));
  CHECK_THROWS_AS(parse_valuation("3/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_valuation("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_valuation("1/2 extra"), std::invalid_argument);
}

TEST_CASE("field ids") {
  CHECK(Q2().id() == "Q_2");
  CHECK(Q2_sqrt2().id() == "Q_2[T]/(T^2 - 2)");
  CHECK(parse_field_id("Q_2").same_field(Q2()));
  CHECK(parse_field_id("Q_2[T]/(T^2 - 2)").same_field(Q2_sqrt2()));
  CHECK(parse_field_id(Q3_sqrt3().id()).same_field(Q3_sqrt3()));
  CHECK_THROWS_AS(parse_field_id("R"), std::invalid_argument);
}

TEST_CASE("valuation json") {
  CHECK(valuation_to_json(V(3, 2)) == Json({{"num", 3}, {"den", 2}}));
  CHECK(valuation_to_json(Valuation::infinity()) == Json("inf"));
  for (const auto& v : {V(3, 2), V(-7, 3), V(0), Valuation::infinity()})
    CHECK(valuation_from_json(valuation_to_json(v)) == v);
}

TEST_CASE("berk point json round trip") {
  Rng rng(6);
  for (const auto& K : {Q2(), Q2_sqrt2(), field(3, "T^3 - 3")}) {
    for (int t = 0; t < 25; ++t) {
      BerkPoint x = random_ball_point(rng, K, true);
      Json j = berk_point_to_json(x);
      BerkPoint y = berk_point_from_json(j);
      CHECK(x == y);
      CHECK(j.dump() == berk_point_to_json(y).dump());
    }
  }
}

TEST_CASE("norm json round trip") {
  MonomialNorm m(2, {make_rational(1, 2), Rational(-2)});
  NormJson back = norm_from_json(monomial_norm_to_json(m), 2);
  REQUIRE(back.torus.has_value());
  CHECK(*back.torus == m);

  BallNorm b(3, make_rational(-5, 2));
  NormJson back2 = norm_from_json(ball_norm_to_json(b), 3);
  REQUIRE(back2.additive.has_value());
  CHECK(*back2.additive == b);
}

TEST_CASE("galois report json is reparse-stable") {
  GaloisOrbitReport rep = galois_fixed_report(2, parse_poly("T^2 - 2"));
  Json j = galois_report_to_json(rep);
  CHECK(j.at("r_exp") == Json({{"num", 3}, {"den", 2}}));
  CHECK(j.at("r_prime_exp") == Json({{"num", 1}, {"den", 2}}));
  CHECK(j.at("fixed_segment").at("closed_open") == true);
  CHECK(j.at("cond_e_vanishes") == true);
  CHECK(j.at("q_reduction") == Json::array({1, 0, 1}));

  // Parsing and re-serializing the textual form is byte-identical.
  std::string text = j.dump(2);
  CHECK(Json::parse(text).dump(2) == text);

  GaloisOrbitReport tame = galois_fixed_report(3, parse_poly("T^2 - 3"));
  Json jt = galois_report_to_json(tame);
  CHECK(jt.at("fixed_segment").is_null());
  CHECK(Json::parse(jt.dump(2)).dump(2) == jt.dump(2));
}

TEST_CASE("witness json") {
  ApartmentMoveWitness w = find_moving_unit(eta(Q2().one(), AV(1)));
  Json j = witness_to_json(w);
  CHECK(j.at("unit") == "alpha");
  CHECK(j.at("extension_used") == "Q_2[T]/(T^2 + T + 1)");
  CHECK(berk_point_from_json(j.at("moved_to")) == w.moved_to);
}
