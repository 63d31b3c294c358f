#pragma once

#include <vector>

#include "berktree/ext_field.hpp"

namespace berktree {

/// Dense univariate polynomial with coefficients in an ExtField.
class KPoly {
 public:
  explicit KPoly(ExtField K);  // zero polynomial over K
  KPoly(ExtField K, std::vector<FieldElt> coeffs);

  /// Coefficient-wise lift of a rational polynomial into K.
  static KPoly lift(const RatPoly& f, const ExtField& K);
  static KPoly variable(const ExtField& K);

  const ExtField& field() const { return K_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  FieldElt coeff(int i) const;  // zero beyond the degree
  const std::vector<FieldElt>& coeffs() const { return c_; }

  KPoly operator+(const KPoly& o) const;
  KPoly operator-(const KPoly& o) const;
  KPoly operator*(const KPoly& o) const;
  KPoly operator*(const FieldElt& s) const;
  bool operator==(const KPoly& o) const;
  bool operator!=(const KPoly& o) const { return !(*this == o); }

  FieldElt eval(const FieldElt& x) const;

 private:
  void trim();
  ExtField K_;
  std::vector<FieldElt> c_;
};

/// Exact coefficients of f(X + a).
KPoly taylor_shift(const KPoly& f, const FieldElt& a);

}  // namespace berktree
