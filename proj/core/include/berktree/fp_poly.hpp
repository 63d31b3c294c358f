#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "berktree/rational_poly.hpp"
#include "berktree/valuation.hpp"

namespace berktree {

/// Least nonnegative residue of a p-integral rational. Throws if the
/// denominator is divisible by p.
std::uint64_t rational_mod_p(const Rational& x, std::uint64_t p);

/// Dense univariate polynomial over the prime field F_p.
class FpPoly {
 public:
  explicit FpPoly(std::uint64_t p);  // zero polynomial
  FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);

  /// Coefficient-wise reduction mod p; requires p-integral coefficients.
  static FpPoly from_rational_poly(const RatPoly& f, std::uint64_t p);
  static FpPoly constant(std::uint64_t p, std::uint64_t c);
  static FpPoly variable(std::uint64_t p);

  std::uint64_t prime() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::uint64_t coeff(int i) const;
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  std::uint64_t leading() const;  // pre: nonzero

  FpPoly operator+(const FpPoly& o) const;
  FpPoly operator-(const FpPoly& o) const;
  FpPoly operator*(const FpPoly& o) const;
  bool operator==(const FpPoly& o) const { return p_ == o.p_ && c_ == o.c_; }
  bool operator!=(const FpPoly& o) const { return !(*this == o); }

  /// "1 + 2*U^3" style rendering with the given variable name.
  std::string str(const std::string& var) const;

 private:
  void trim();
  std::uint64_t p_;
  std::vector<std::uint64_t> c_;
};

/// Remainder of a mod b. Pre: b nonzero.
FpPoly rem(const FpPoly& a, const FpPoly& b);
/// Monic gcd (zero if both inputs are zero).
FpPoly monic_gcd(FpPoly a, FpPoly b);
/// base^exp mod m, exp >= 0.
FpPoly pow_mod(const FpPoly& base, const Integer& exp, const FpPoly& m);
/// (X - root)^n scaled by lead, reduced mod p.
FpPoly shifted_power(std::uint64_t p, std::uint64_t root, int n, std::uint64_t lead);

/// Rabin irreducibility test over F_p. Pre: f nonconstant.
bool is_irreducible(const FpPoly& f);

}  // namespace berktree
