#include "berktree/kpoly.hpp"

#include <stdexcept>

namespace berktree {

KPoly::KPoly(ExtField K) : K_(std::move(K)) {}

KPoly::KPoly(ExtField K, std::vector<FieldElt> coeffs) : K_(std::move(K)), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (!c.field().same_field(K_))
      throw std::invalid_argument("coefficient from a different field");
  trim();
}

KPoly KPoly::lift(const RatPoly& f, const ExtField& K) {
  std::vector<FieldElt> v;
  v.reserve(static_cast<size_t>(f.degree() + 1));
  for (int i = 0; i <= f.degree(); ++i) v.push_back(K.from_rational(f.coeff(i)));
  return KPoly(K, std::move(v));
}

KPoly KPoly::variable(const ExtField& K) {
  return KPoly(K, {K.zero(), K.one()});
}

void KPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldElt KPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return K_.zero();
  return c_[static_cast<size_t>(i)];
}

KPoly KPoly::operator+(const KPoly& o) const {
  if (!K_.same_field(o.K_)) throw std::invalid_argument("polynomials over different fields");
  std::vector<FieldElt> v;
  size_t n = std::max(c_.size(), o.c_.size());
  v.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    FieldElt a = i < c_.size() ? c_[i] : K_.zero();
    FieldElt b = i < o.c_.size() ? o.c_[i] : K_.zero();
    v.push_back(a + b);
  }
  return KPoly(K_, std::move(v));
}

KPoly KPoly::operator-(const KPoly& o) const {
  return *this + (o * K_.from_rational(Rational(-1)));
}

KPoly KPoly::operator*(const KPoly& o) const {
  if (!K_.same_field(o.K_)) throw std::invalid_argument("polynomials over different fields");
  if (is_zero() || o.is_zero()) return KPoly(K_);
  std::vector<FieldElt> v(c_.size() + o.c_.size() - 1, K_.zero());
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] = v[i + j] + c_[i] * o.c_[j];
  return KPoly(K_, std::move(v));
}

KPoly KPoly::operator*(const FieldElt& s) const {
  std::vector<FieldElt> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(c * s);
  return KPoly(K_, std::move(v));
}

bool KPoly::operator==(const KPoly& o) const {
  if (!K_.same_field(o.K_) || c_.size() != o.c_.size()) return false;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

FieldElt KPoly::eval(const FieldElt& x) const {
  FieldElt acc = K_.zero();
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

KPoly taylor_shift(const KPoly& f, const FieldElt& a) {
  const ExtField& K = f.field();
  if (!a.field().same_field(K)) throw std::invalid_argument("shift by an element of a different field");
  // Horner in (X + a): feeding the coefficients from the top yields f(X + a).
  KPoly acc(K);
  KPoly shift(K, {a, K.one()});
  for (int i = f.degree(); i >= 0; --i) {
    acc = acc * shift + KPoly(K, {f.coeff(i)});
  }
  return acc;
}

}  // namespace berktree
