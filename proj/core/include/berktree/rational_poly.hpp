#pragma once

#include <vector>

#include "berktree/valuation.hpp"

namespace berktree {

/// Dense univariate polynomial with exact rational coefficients.
/// Coefficient i belongs to X^i; the vector carries no trailing zeros, and
/// the zero polynomial is the empty vector (degree -1).
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);

  static RatPoly constant(const Rational& c);
  static RatPoly variable();  // X
  /// c * X^k
  static RatPoly monomial(const Rational& c, int k);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Coefficient of X^i (zero beyond the degree).
  const Rational& coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const;  // pre: nonzero
  bool is_monic() const;

  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator-() const;
  RatPoly operator*(const RatPoly& o) const;
  RatPoly operator*(const Rational& s) const;

  bool operator==(const RatPoly& o) const { return c_ == o.c_; }
  bool operator!=(const RatPoly& o) const { return !(*this == o); }

  Rational eval(const Rational& x) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Euclidean division a = q*b + r with deg r < deg b. Pre: b nonzero.
struct RatPolyDivision {
  RatPoly quotient;
  RatPoly remainder;
};
RatPolyDivision divmod(const RatPoly& a, const RatPoly& b);

/// Resultant Res(f, g). For monic f of degree e this is the product of
/// g over the roots of f, i.e. the field norm of g(alpha) in Q[T]/(f).
Rational resultant(const RatPoly& f, const RatPoly& g);

}  // namespace berktree
