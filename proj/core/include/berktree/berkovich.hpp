#pragma once

#include "berktree/kpoly.hpp"
#include "berktree/valuation.hpp"

namespace berktree {

/// A point of the Berkovich affine line over a valued field: the maximal
/// point of the closed ball E(center, radius). Radius zero (exponent
/// +infinity) is a type-1 rational point.
///
/// Equality is ball identity: equal radii and |center1 - center2| <= radius.
class BerkPoint {
 public:
  BerkPoint(FieldElt center, AbsValue radius);

  const ExtField& context() const { return center_.field(); }
  const FieldElt& center() const { return center_; }
  const AbsValue& radius() const { return radius_; }
  bool is_type1() const { return radius_.is_zero(); }

  bool operator==(const BerkPoint& o) const;
  bool operator!=(const BerkPoint& o) const { return !(*this == o); }

  /// "eta(1 + alpha; 2^(-3/2))".
  std::string str() const;

 private:
  FieldElt center_;
  AbsValue radius_;
};

/// The path parametrization: eta(a, r) is the maximal point of E(a, r).
BerkPoint eta(const FieldElt& a, const AbsValue& radius);

/// Domination order on the line: ball containment. Contexts must agree or
/// one must embed into the other along the declared tower; otherwise the
/// points are incomparable and the call is rejected.
bool leq(const BerkPoint& x, const BerkPoint& y);

/// Least upper bound: the maximal point of the smallest closed ball
/// containing both.
BerkPoint join(const BerkPoint& x, const BerkPoint& y);

/// Gauss seminorm of f at x: writing f = sum c_i (X - a)^i with a the
/// center, the value is max_i |c_i| r^i; evaluation |f(a)| at type-1
/// points. f may live over the point's field or over the degree-1 base.
AbsValue seminorm_eval(const KPoly& f, const BerkPoint& x);

enum class PointType { type1 = 1, type2 = 2, type3 = 3 };

/// Type 1 iff radius zero; type 2 otherwise (rational radius exponents
/// only, so type 3 is never produced).
PointType point_type(const BerkPoint& x);

/// Strict containment in the open ball D(center, radius).
bool in_open_ball(const FieldElt& a, const FieldElt& center, const AbsValue& radius);

}  // namespace berktree
