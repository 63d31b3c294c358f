#pragma once

#include <vector>

#include "berktree/kpoly.hpp"
#include "berktree/valuation.hpp"

namespace berktree {

/// One slope of a Newton polygon, reported as the common valuation of the
/// corresponding roots (the negated geometric slope of the lower hull).
struct NewtonSlope {
  Valuation root_valuation;
  int multiplicity;
  bool operator==(const NewtonSlope& o) const {
    return root_valuation == o.root_valuation && multiplicity == o.multiplicity;
  }
};

/// Sorted ascending by root valuation; multiplicities sum to the degree of
/// the analyzed polynomial (zero roots, valuation +infinity, included only
/// when they were not dropped).
class NewtonPolygon {
 public:
  explicit NewtonPolygon(std::vector<NewtonSlope> slopes) : slopes_(std::move(slopes)) {}
  const std::vector<NewtonSlope>& slopes() const { return slopes_; }
  int total_multiplicity() const;

 private:
  std::vector<NewtonSlope> slopes_;
};

/// Lower convex hull of (i, v(c_i)). With drop_zero_roots the factor X^m of
/// zero roots is removed first. Pre: f nonzero.
NewtonPolygon newton_polygon(const KPoly& f, bool drop_zero_roots);

/// The multiset {|a^g - a| : conjugates a^g != a} for the generator of an
/// Eisenstein extension, sorted descending, so the orbit diameter is the
/// front entry. Pre: kind eisenstein and degree >= 2.
std::vector<AbsValue> conjugate_distances(const ExtField& K);

}  // namespace berktree
