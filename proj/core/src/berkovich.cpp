#include "berktree/berkovich.hpp"

#include <stdexcept>

#include "berktree/poly_text.hpp"

namespace berktree {

namespace {

/// Lifts the pair to a common context along the declared tower
/// (base embeds into any extension over the same prime).
std::pair<BerkPoint, BerkPoint> common_context(const BerkPoint& x, const BerkPoint& y) {
  if (x.context().same_field(y.context())) return {x, y};
  if (x.context().embeds_into(y.context()))
    return {BerkPoint(embed(x.center(), y.context()), x.radius()), y};
  if (y.context().embeds_into(x.context()))
    return {x, BerkPoint(embed(y.center(), x.context()), y.radius())};
  throw std::invalid_argument("incomparable contexts: " + x.context().id() + " vs " +
                              y.context().id());
}

}  // namespace

BerkPoint::BerkPoint(FieldElt center, AbsValue radius)
    : center_(std::move(center)), radius_(radius) {}

bool BerkPoint::operator==(const BerkPoint& o) const {
  auto [a, b] = common_context(*this, o);
  if (a.radius() != b.radius()) return false;
  return abs_value(a.center() - b.center()) <= a.radius();
}

std::string BerkPoint::str() const {
  return "eta(" + format_element(center_) + "; " + radius_.str(context().p()) + ")";
}

BerkPoint eta(const FieldElt& a, const AbsValue& radius) { return BerkPoint(a, radius); }

bool leq(const BerkPoint& x, const BerkPoint& y) {
  auto [a, b] = common_context(x, y);
  if (!(a.radius() <= b.radius())) return false;
  return abs_value(a.center() - b.center()) <= b.radius();
}

BerkPoint join(const BerkPoint& x, const BerkPoint& y) {
  auto [a, b] = common_context(x, y);
  AbsValue r = max(max(a.radius(), b.radius()), abs_value(a.center() - b.center()));
  return BerkPoint(a.center(), r);
}

AbsValue seminorm_eval(const KPoly& f, const BerkPoint& x) {
  KPoly g(x.context());
  if (f.field().same_field(x.context())) {
    g = f;
  } else if (f.field().embeds_into(x.context())) {
    std::vector<FieldElt> lifted;
    lifted.reserve(static_cast<size_t>(f.degree() + 1));
    for (int i = 0; i <= f.degree(); ++i) lifted.push_back(embed(f.coeff(i), x.context()));
    g = KPoly(x.context(), std::move(lifted));
  } else {
    throw std::invalid_argument("polynomial field does not embed into the point's context");
  }
  KPoly shifted = taylor_shift(g, x.center());
  AbsValue best = AbsValue::zero();
  for (int i = 0; i <= shifted.degree(); ++i) {
    AbsValue term = abs_value(shifted.coeff(i)) * x.radius().pow(i);
    best = max(best, term);
  }
  return best;
}

PointType point_type(const BerkPoint& x) {
  return x.is_type1() ? PointType::type1 : PointType::type2;
}

bool in_open_ball(const FieldElt& a, const FieldElt& center, const AbsValue& radius) {
  return abs_value(a - center) < radius;
}

}  // namespace berktree
