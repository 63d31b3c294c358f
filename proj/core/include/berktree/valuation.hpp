#pragma once

#include <gmpxx.h>

#include <string>

namespace berktree {

using Rational = mpq_class;
using Integer = mpz_class;

/// Builds a canonical rational num/den. Throws on den == 0.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den);

/// An additive valuation value: an exact rational, or +infinity for v(0).
///
/// The order is the usual one on Q extended by a largest element. Addition
/// treats infinity as absorbing.
class Valuation {
 public:
  Valuation() : infinite_(false), value_(0) {}
  Valuation(long v) : infinite_(false), value_(v) {}
  Valuation(const Rational& v) : infinite_(false), value_(v) {}

  static Valuation infinity();

  bool is_infinite() const { return infinite_; }
  /// Finite rational value. Pre: !is_infinite().
  const Rational& value() const;

  Valuation operator+(const Valuation& o) const;
  Valuation operator-(const Valuation& o) const;  // pre: o finite
  /// k * v. Pre: finite, or k >= 0 (scaling infinity by k > 0 stays
  /// infinite; by k == 0 gives 0, matching r^0 = 1 on the value side).
  Valuation scaled(long k) const;

  bool operator==(const Valuation& o) const;
  bool operator!=(const Valuation& o) const { return !(*this == o); }
  bool operator<(const Valuation& o) const;
  bool operator>(const Valuation& o) const { return o < *this; }
  bool operator<=(const Valuation& o) const { return !(o < *this); }
  bool operator>=(const Valuation& o) const { return !(*this < o); }

  /// "3/2", "-1", or "inf".
  std::string str() const;

 private:
  bool infinite_;
  Rational value_;
};

Valuation min(const Valuation& a, const Valuation& b);
Valuation max(const Valuation& a, const Valuation& b);

/// A non-Archimedean absolute value p^(-exponent), stored as the exact
/// exponent; exponent +infinity encodes |0|.
///
/// Multiplying values adds exponents; the value order is the reverse of the
/// exponent order, so |0| (exponent infinity) is the minimum.
class AbsValue {
 public:
  AbsValue() : exp_(0) {}  // the value 1

  static AbsValue from_exponent(const Valuation& q) { return AbsValue(q); }
  static AbsValue one() { return AbsValue(Valuation(0)); }
  static AbsValue zero() { return AbsValue(Valuation::infinity()); }

  const Valuation& exponent() const { return exp_; }
  bool is_zero() const { return exp_.is_infinite(); }
  bool is_one() const { return !exp_.is_infinite() && exp_.value() == 0; }

  AbsValue operator*(const AbsValue& o) const {
    return AbsValue(exp_ + o.exp_);
  }
  /// |x|^k. Pre: k >= 0, or !is_zero().
  AbsValue pow(long k) const;

  bool operator==(const AbsValue& o) const { return exp_ == o.exp_; }
  bool operator!=(const AbsValue& o) const { return !(*this == o); }
  bool operator<(const AbsValue& o) const { return exp_ > o.exp_; }
  bool operator>(const AbsValue& o) const { return o < *this; }
  bool operator<=(const AbsValue& o) const { return !(o < *this); }
  bool operator>=(const AbsValue& o) const { return !(*this < o); }

  /// Rendered against the prime, e.g. "2^(-3/2)"; "1" for exponent 0 and
  /// "0" for the zero value.
  std::string str(unsigned long p) const;

 private:
  explicit AbsValue(const Valuation& q) : exp_(q) {}
  Valuation exp_;
};

AbsValue min(const AbsValue& a, const AbsValue& b);
AbsValue max(const AbsValue& a, const AbsValue& b);

}  // namespace berktree
