#include "berktree/valuation.hpp"

#include <stdexcept>

namespace berktree {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

Valuation Valuation::infinity() {
  Valuation v;
  v.infinite_ = true;
  return v;
}

const Rational& Valuation::value() const {
  if (infinite_) throw std::domain_error("infinite valuation has no rational value");
  return value_;
}

Valuation Valuation::operator+(const Valuation& o) const {
  if (infinite_ || o.infinite_) return infinity();
  return Valuation(Rational(value_ + o.value_));
}

Valuation Valuation::operator-(const Valuation& o) const {
  if (o.infinite_) throw std::domain_error("cannot subtract an infinite valuation");
  if (infinite_) return infinity();
  return Valuation(Rational(value_ - o.value_));
}

Valuation Valuation::scaled(long k) const {
  if (k == 0) return Valuation(0);
  if (infinite_) {
    if (k < 0) throw std::domain_error("negative scaling of an infinite valuation");
    return infinity();
  }
  return Valuation(Rational(value_ * k));
}

bool Valuation::operator==(const Valuation& o) const {
  if (infinite_ != o.infinite_) return false;
  return infinite_ || value_ == o.value_;
}

bool Valuation::operator<(const Valuation& o) const {
  if (infinite_) return false;
  if (o.infinite_) return true;
  return value_ < o.value_;
}

std::string Valuation::str() const {
  if (infinite_) return "inf";
  return value_.get_str();
}

Valuation min(const Valuation& a, const Valuation& b) { return a < b ? a : b; }
Valuation max(const Valuation& a, const Valuation& b) { return a < b ? b : a; }

AbsValue AbsValue::pow(long k) const {
  return AbsValue(exp_.scaled(k));
}

std::string AbsValue::str(unsigned long p) const {
  if (is_zero()) return "0";
  if (is_one()) return "1";
  Rational neg = -exp_.value();
  return std::to_string(p) + "^(" + neg.get_str() + ")";
}

AbsValue min(const AbsValue& a, const AbsValue& b) { return a < b ? a : b; }
AbsValue max(const AbsValue& a, const AbsValue& b) { return a < b ? b : a; }

}  // namespace berktree
