#include "berktree/bt_tree.hpp"

#include <stdexcept>

#include "berktree/poly_text.hpp"

namespace berktree {

Valuation distance_to_base(const FieldElt& x) {
  const ExtField& K = x.field();
  if (K.kind() == FieldKind::trivial) return Valuation::infinity();
  if (K.kind() != FieldKind::eisenstein)
    throw std::invalid_argument("distance to base is implemented for totally ramified extensions only");
  int e = K.degree();
  Valuation best = Valuation::infinity();
  for (int i = 1; i < e; ++i) {
    if (x.coord(i) == 0) continue;
    Valuation term = padic_valuation(K.p(), x.coord(i)) + Valuation(make_rational(i, e));
    best = min(best, term);
  }
  return best;
}

BerkPoint retract(const BerkPoint& x) {
  const ExtField& K = x.context();
  if (K.kind() == FieldKind::trivial) return x;
  if (K.kind() != FieldKind::eisenstein)
    throw std::invalid_argument("retraction over unramified contexts is not supported");
  AbsValue d = AbsValue::from_exponent(distance_to_base(x.center()));
  FieldElt base_center = K.from_rational(x.center().coord(0));
  return BerkPoint(base_center, max(x.radius(), d));
}

bool in_building(const BerkPoint& x) {
  if (x.is_type1())
    throw std::invalid_argument("rational points are omitted from the building; radius must be positive");
  return retract(x) == x;
}

RescaledPoly rescaled_eisenstein_poly(const ExtField& K) {
  if (K.kind() != FieldKind::eisenstein)
    throw std::invalid_argument("rescaling needs an Eisenstein polynomial");
  const RatPoly& P = K.defining_poly();
  int e = K.degree();
  Rational a0 = P.coeff(0);
  FieldElt gen = K.generator();

  std::vector<FieldElt> q;
  q.reserve(static_cast<size_t>(e) + 1);
  for (int i = 0; i <= e; ++i) {
    // coefficient of U^i: a_i * alpha^i / a_0 (a_e = 1), integral of
    // absolute value at most 1.
    q.push_back(gen.pow(i) * (P.coeff(i) / a0));
  }
  KPoly qpoly(K, std::move(q));

  std::vector<std::uint64_t> red;
  red.reserve(static_cast<size_t>(e) + 1);
  for (int i = 0; i <= e; ++i) {
    ResidueElt r = residue_reduce(qpoly.coeff(i));
    red.push_back(r.value.coeff(0));
  }
  return RescaledPoly{std::move(qpoly), FpPoly(K.p(), std::move(red))};
}

GaloisOrbitReport galois_fixed_report(unsigned long p, const RatPoly& eisenstein_poly) {
  ExtField K = ExtField::make(p, eisenstein_poly);
  if (K.kind() != FieldKind::eisenstein)
    throw std::invalid_argument("fixed-point analysis needs an Eisenstein polynomial (got " +
                                to_string(K.kind()) + " kind)");

  GaloisOrbitReport rep;
  rep.p = p;
  rep.defining_poly = eisenstein_poly;
  rep.e = K.degree();

  std::vector<AbsValue> dists = conjugate_distances(K);
  rep.r = dists.front();  // sorted descending: orbit diameter first
  rep.r_prime = AbsValue::from_exponent(distance_to_base(K.generator()));

  rep.cond_paths_outside = rep.r < rep.r_prime;
  rep.cond_open_ball = true;
  for (const auto& d : dists)
    if (!(d < rep.r_prime)) rep.cond_open_ball = false;

  RescaledPoly rescaled = rescaled_eisenstein_poly(K);
  rep.q_reduction = rescaled.reduction;
  // All roots of the rescaled polynomial lie in D(1,1) iff its reduction is
  // lc * (U - 1)^e.
  rep.cond_q_roots = rescaled.reduction == shifted_power(p, 1, rep.e, rescaled.reduction.leading());
  rep.cond_e_vanishes = (static_cast<unsigned long>(rep.e) % p) == 0;

  if (rep.cond_paths_outside) rep.fixed_segment = FixedSegment{rep.r, rep.r_prime};
  return rep;
}

BerkPoint galois_conjugate(const BerkPoint& x) {
  const ExtField& K = x.context();
  if (K.degree() != 2 || K.kind() == FieldKind::trivial)
    throw std::invalid_argument("explicit Galois conjugation is implemented in degree 2 only");
  // T^2 + a1 T + a0: the conjugate of the generator is -a1 - gen, so
  // (b0, b1) -> (b0 - a1 b1, -b1).
  Rational a1 = K.defining_poly().coeff(1);
  FieldElt c = x.center();
  FieldElt conj = K.element({c.coord(0) - a1 * c.coord(1), -c.coord(1)});
  return BerkPoint(conj, x.radius());
}

BerkPoint apartment_action(const FieldElt& t, const BerkPoint& x) {
  if (t.is_zero()) throw std::invalid_argument("torus action needs a nonzero element");
  FieldElt tt = t;
  BerkPoint base = x;
  if (!t.field().same_field(x.context())) {
    if (t.field().embeds_into(x.context())) {
      tt = embed(t, x.context());
    } else if (x.context().embeds_into(t.field())) {
      base = BerkPoint(embed(x.center(), t.field()), x.radius());
    } else {
      throw std::invalid_argument("torus element and point live in incomparable contexts");
    }
  }
  FieldElt t2 = tt * tt;
  AbsValue scale = abs_value(t2);
  return BerkPoint(t2 * base.center(), scale * base.radius());
}

ExtField quadratic_unramified(unsigned long p) {
  if (p == 2) {
    return ExtField::make(2, RatPoly({Rational(1), Rational(1), Rational(1)}));
  }
  // T^2 - n with n the smallest quadratic nonresidue mod p.
  for (unsigned long n = 2; n < p; ++n) {
    bool residue = false;
    for (unsigned long y = 1; y < p; ++y)
      if ((y * y) % p == n) {
        residue = true;
        break;
      }
    if (!residue)
      return ExtField::make(p, RatPoly({Rational(-static_cast<long>(n)), Rational(0), Rational(1)}));
  }
  throw std::domain_error("no quadratic nonresidue found; is p prime?");
}

ApartmentMoveWitness find_moving_unit(const BerkPoint& x) {
  const ExtField& k = x.context();
  if (k.kind() != FieldKind::trivial)
    throw std::invalid_argument("the unit search expects a point over the base field");
  AbsValue center_abs = abs_value(x.center());
  if (!(center_abs > x.radius()))
    throw std::invalid_argument(
        "point lies on the apartment (|center| <= radius); no unit moves it");

  unsigned long p = k.p();
  // Base-field residue representatives first.
  for (unsigned long u = 2; u < p; ++u) {
    FieldElt t = k.from_rational(Rational(static_cast<long>(u)));
    FieldElt shift = t * t - k.one();
    if (abs_value(shift) * center_abs > x.radius()) {
      return ApartmentMoveWitness{t, std::nullopt, apartment_action(t, x)};
    }
  }
  // Fall through to the quadratic unramified extension: the generator's
  // residue is not a square root of 1 there, so |t^2 - 1| = 1.
  ExtField K = quadratic_unramified(p);
  FieldElt t = K.generator();
  FieldElt shift = t * t - K.one();
  if (!(abs_value(shift) * center_abs > x.radius()))
    throw std::logic_error("unramified quadratic unit fails to move an off-apartment point");
  BerkPoint lifted(embed(x.center(), K), x.radius());
  return ApartmentMoveWitness{t, K, apartment_action(t, lifted)};
}

}  // namespace berktree
