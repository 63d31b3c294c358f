#include "berktree/rational_poly.hpp"

#include <stdexcept>

namespace berktree {

namespace {
const Rational kZero(0);

Rational rational_pow(const Rational& base, int k) {
  Rational acc(1);
  for (int i = 0; i < k; ++i) acc *= base;
  return acc;
}
}  // namespace

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly RatPoly::constant(const Rational& c) { return RatPoly({c}); }

RatPoly RatPoly::variable() { return RatPoly({Rational(0), Rational(1)}); }

RatPoly RatPoly::monomial(const Rational& c, int k) {
  if (k < 0) throw std::invalid_argument("monomial with negative exponent");
  std::vector<Rational> v(static_cast<size_t>(k) + 1, Rational(0));
  v.back() = c;
  return RatPoly(std::move(v));
}

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& RatPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(i)];
}

const Rational& RatPoly::leading() const {
  if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return c_.back();
}

bool RatPoly::is_monic() const { return !c_.empty() && c_.back() == 1; }

RatPoly RatPoly::operator+(const RatPoly& o) const {
  std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return RatPoly(std::move(v));
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator-() const {
  std::vector<Rational> v(c_);
  for (auto& x : v) x = -x;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (is_zero() || o.is_zero()) return RatPoly();
  std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return RatPoly(std::move(v));
}

RatPoly RatPoly::operator*(const Rational& s) const {
  std::vector<Rational> v(c_);
  for (auto& x : v) x *= s;
  return RatPoly(std::move(v));
}

Rational RatPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

RatPolyDivision divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  RatPoly r = a;
  std::vector<Rational> q(
      a.degree() >= b.degree() ? static_cast<size_t>(a.degree() - b.degree()) + 1 : 0,
      Rational(0));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int k = r.degree() - b.degree();
    Rational c = r.leading() / b.leading();
    q[static_cast<size_t>(k)] = c;
    r = r - RatPoly::monomial(c, k) * b;
  }
  return {RatPoly(std::move(q)), r};
}

Rational resultant(const RatPoly& f, const RatPoly& g) {
  if (f.is_zero() || g.is_zero()) return Rational(0);
  if (f.degree() == 0) return rational_pow(f.leading(), g.degree());
  if (g.degree() == 0) return rational_pow(g.leading(), f.degree());
  // Euclidean recursion: Res(f, g) = (-1)^(deg f * deg g) lc(g)^(deg f - deg r) Res(g, r).
  RatPoly r = divmod(f, g).remainder;
  if (r.is_zero()) return Rational(0);
  int sign = (f.degree() % 2 == 1 && g.degree() % 2 == 1) ? -1 : 1;
  Rational scale = rational_pow(g.leading(), f.degree() - r.degree());
  return Rational(sign) * scale * resultant(g, r);
}

}  // namespace berktree
