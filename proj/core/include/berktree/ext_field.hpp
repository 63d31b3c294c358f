#pragma once

#include <memory>
#include <string>
#include <vector>

#include "berktree/fp_poly.hpp"
#include "berktree/rational_poly.hpp"
#include "berktree/valuation.hpp"

namespace berktree {

/// Exact p-adic valuation of a rational, normalized by v(p) = 1; infinity
/// for zero. Denominators divisible by p are fine (negative valuations).
Valuation padic_valuation(unsigned long p, const Rational& x);

enum class FieldKind { trivial, eisenstein, unramified };

std::string to_string(FieldKind k);

class FieldElt;

/// A finite extension of the p-adic base field, presented by a monic
/// defining polynomial with p-integral rational coefficients.
///
/// Recognized shapes: degree 1 (the base field itself), Eisenstein
/// (totally ramified), and unramified (irreducible reduction mod p).
/// Copying is cheap; the underlying description is immutable and shared.
class ExtField {
 public:
  /// Classifies and validates; throws std::invalid_argument with a
  /// diagnostic naming the failed criterion otherwise.
  static ExtField make(unsigned long p, const RatPoly& defining_poly);
  /// The base field Q_p itself (degree-1 defining polynomial T).
  static ExtField rationals(unsigned long p);

  unsigned long p() const;
  FieldKind kind() const;
  int degree() const;
  const RatPoly& defining_poly() const;
  /// Reduction of the defining polynomial mod p; meaningful for the
  /// unramified kind, where it presents the residue field.
  const FpPoly& residue_modulus() const;

  /// Same presented field: equal p and defining data (all degree-1
  /// presentations of the base field count as the same context).
  bool same_field(const ExtField& o) const;
  /// True when elements of this field embed into K: same field, or this
  /// is the degree-1 base and K any extension over the same prime.
  bool embeds_into(const ExtField& K) const;

  FieldElt generator() const;  // the class of T
  FieldElt from_rational(const Rational& c) const;
  FieldElt element(std::vector<Rational> coords) const;
  FieldElt zero() const;
  FieldElt one() const;

  /// "Q_2" or "Q_2[T]/(T^2 - 2)".
  std::string id() const;

 private:
  struct Data;
  explicit ExtField(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
  friend class FieldElt;
};

/// An element of an ExtField, stored as exact rational coordinates in the
/// basis 1, a, ..., a^(e-1) where a is the class of T. Arithmetic is
/// polynomial arithmetic modulo the defining polynomial, so representations
/// are unique.
class FieldElt {
 public:
  FieldElt(ExtField K, std::vector<Rational> coords);

  const ExtField& field() const { return K_; }
  const std::vector<Rational>& coords() const { return c_; }
  const Rational& coord(int i) const;
  bool is_zero() const;
  /// True when all coordinates above the constant one vanish.
  bool is_rational() const;

  FieldElt operator+(const FieldElt& o) const;
  FieldElt operator-(const FieldElt& o) const;
  FieldElt operator-() const;
  FieldElt operator*(const FieldElt& o) const;
  FieldElt operator*(const Rational& s) const;
  FieldElt operator/(const Rational& s) const;  // pre: s != 0
  FieldElt pow(int k) const;                    // pre: k >= 0
  bool operator==(const FieldElt& o) const;
  bool operator!=(const FieldElt& o) const { return !(*this == o); }

  /// Representing polynomial (coordinates as a RatPoly in T).
  RatPoly repr_poly() const;

 private:
  ExtField K_;
  std::vector<Rational> c_;
};

/// v(x) = v_p(N(x)) / e with the field norm N computed as the resultant of
/// the defining polynomial and the representing polynomial of x. Exact
/// rational with denominator dividing e; infinity iff x = 0.
Valuation valuation(const FieldElt& x);
/// |x| = p^(-v(x)).
AbsValue abs_value(const FieldElt& x);

/// Canonical residue representative: a constant for residue fields with p
/// elements, a polynomial of degree < e over F_p for the unramified kind.
struct ResidueElt {
  FpPoly value;
  FpPoly modulus;  // zero polynomial for prime residue fields
  bool operator==(const ResidueElt& o) const { return value == o.value; }
  std::string str() const;
};

/// Reduction into the residue field. Pre: v(x) >= 0 (rejected otherwise).
ResidueElt residue_reduce(const FieldElt& x);

/// Embeds x into K. Pre: x.field().embeds_into(K).
FieldElt embed(const FieldElt& x, const ExtField& K);

}  // namespace berktree
