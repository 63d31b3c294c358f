#include "berktree/ext_field.hpp"

#include <stdexcept>

#include "berktree/poly_text.hpp"

namespace berktree {

namespace {

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool p_integral(const RatPoly& f, unsigned long p) {
  Integer P(p);
  for (int i = 0; i <= f.degree(); ++i) {
    Integer den = f.coeff(i).get_den();
    if (mpz_divisible_p(den.get_mpz_t(), P.get_mpz_t())) return false;
  }
  return true;
}

}  // namespace

Valuation padic_valuation(unsigned long p, const Rational& x) {
  if (p < 2) throw std::invalid_argument("prime must be at least 2");
  if (x == 0) return Valuation::infinity();
  Integer P(p);
  Integer tmp;
  unsigned long vnum = mpz_remove(tmp.get_mpz_t(), x.get_num().get_mpz_t(), P.get_mpz_t());
  unsigned long vden = mpz_remove(tmp.get_mpz_t(), x.get_den().get_mpz_t(), P.get_mpz_t());
  return Valuation(Rational(static_cast<long>(vnum) - static_cast<long>(vden)));
}

std::string to_string(FieldKind k) {
  switch (k) {
    case FieldKind::trivial: return "trivial";
    case FieldKind::eisenstein: return "eisenstein";
    case FieldKind::unramified: return "unramified";
  }
  return "?";
}

struct ExtField::Data {
  unsigned long p;
  RatPoly poly;
  FieldKind kind;
  int degree;
  FpPoly residue_modulus;

  Data(unsigned long p_, RatPoly poly_, FieldKind kind_, int degree_, FpPoly rm)
      : p(p_), poly(std::move(poly_)), kind(kind_), degree(degree_), residue_modulus(std::move(rm)) {}
};

ExtField ExtField::make(unsigned long p, const RatPoly& defining_poly) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (defining_poly.degree() < 1)
    throw std::invalid_argument("defining polynomial must be nonconstant");
  if (!defining_poly.is_monic())
    throw std::invalid_argument("defining polynomial must be monic");
  if (!p_integral(defining_poly, p))
    throw std::invalid_argument("defining polynomial must have p-integral coefficients");

  int e = defining_poly.degree();
  if (e == 1) {
    return ExtField(std::make_shared<const Data>(p, defining_poly, FieldKind::trivial, 1, FpPoly(p)));
  }

  // Eisenstein: every non-leading coefficient has valuation >= 1 and the
  // constant term has valuation exactly 1.
  bool eisenstein = true;
  std::string why_not_eisenstein;
  for (int i = 0; i < e && eisenstein; ++i) {
    Valuation v = padic_valuation(p, defining_poly.coeff(i));
    if (i == 0 && v != Valuation(1)) {
      eisenstein = false;
      why_not_eisenstein = "constant term has p-adic valuation " + v.str() + ", expected exactly 1";
    } else if (v < Valuation(1)) {
      eisenstein = false;
      why_not_eisenstein = "coefficient of T^" + std::to_string(i) +
                           " has p-adic valuation " + v.str() + " < 1";
    }
  }
  if (eisenstein) {
    return ExtField(std::make_shared<const Data>(p, defining_poly, FieldKind::eisenstein, e, FpPoly(p)));
  }

  FpPoly reduced = FpPoly::from_rational_poly(defining_poly, p);
  if (reduced.degree() == e && is_irreducible(reduced)) {
    return ExtField(std::make_shared<const Data>(p, defining_poly, FieldKind::unramified, e, reduced));
  }

  throw std::invalid_argument(
      "polynomial defines neither an Eisenstein nor an unramified extension: not Eisenstein (" +
      why_not_eisenstein + "); reduction mod " + std::to_string(p) + " is reducible");
}

ExtField ExtField::rationals(unsigned long p) {
  return make(p, RatPoly::variable());
}

unsigned long ExtField::p() const { return d_->p; }
FieldKind ExtField::kind() const { return d_->kind; }
int ExtField::degree() const { return d_->degree; }
const RatPoly& ExtField::defining_poly() const { return d_->poly; }
const FpPoly& ExtField::residue_modulus() const { return d_->residue_modulus; }

bool ExtField::same_field(const ExtField& o) const {
  if (d_ == o.d_) return true;
  if (d_->p != o.d_->p) return false;
  if (d_->kind == FieldKind::trivial && o.d_->kind == FieldKind::trivial) return true;
  return d_->kind == o.d_->kind && d_->poly == o.d_->poly;
}

bool ExtField::embeds_into(const ExtField& K) const {
  if (same_field(K)) return true;
  return d_->kind == FieldKind::trivial && d_->p == K.d_->p;
}

FieldElt ExtField::generator() const {
  std::vector<Rational> c(static_cast<size_t>(degree()), Rational(0));
  if (degree() == 1) {
    // Degree one: the class of T is the rational root of the defining
    // polynomial, T - a0 -> a0.
    c[0] = -d_->poly.coeff(0);
  } else {
    c[1] = 1;
  }
  return FieldElt(*this, std::move(c));
}

FieldElt ExtField::from_rational(const Rational& c) const {
  std::vector<Rational> v(static_cast<size_t>(degree()), Rational(0));
  v[0] = c;
  return FieldElt(*this, std::move(v));
}

FieldElt ExtField::element(std::vector<Rational> coords) const {
  return FieldElt(*this, std::move(coords));
}

FieldElt ExtField::zero() const { return from_rational(Rational(0)); }
FieldElt ExtField::one() const { return from_rational(Rational(1)); }

std::string ExtField::id() const {
  if (kind() == FieldKind::trivial) return "Q_" + std::to_string(p());
  return "Q_" + std::to_string(p()) + "[T]/(" + format_poly(defining_poly(), "T") + ")";
}

FieldElt::FieldElt(ExtField K, std::vector<Rational> coords) : K_(std::move(K)), c_(std::move(coords)) {
  size_t e = static_cast<size_t>(K_.degree());
  if (c_.size() > e) {
    // Reduce the representing polynomial mod the defining polynomial.
    RatPoly r = divmod(RatPoly(std::vector<Rational>(c_)), K_.defining_poly()).remainder;
    c_.assign(e, Rational(0));
    for (size_t i = 0; i < e; ++i) c_[i] = r.coeff(static_cast<int>(i));
  } else {
    c_.resize(e, Rational(0));
  }
}

const Rational& FieldElt::coord(int i) const {
  static const Rational kZero(0);
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(i)];
}

bool FieldElt::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool FieldElt::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

namespace {
void require_same_field(const FieldElt& a, const FieldElt& b) {
  if (!a.field().same_field(b.field()))
    throw std::invalid_argument("elements of different fields: " + a.field().id() + " vs " +
                                b.field().id());
}
}  // namespace

FieldElt FieldElt::operator+(const FieldElt& o) const {
  require_same_field(*this, o);
  std::vector<Rational> v(c_);
  for (size_t i = 0; i < v.size(); ++i) v[i] += o.c_[i];
  return FieldElt(K_, std::move(v));
}

FieldElt FieldElt::operator-(const FieldElt& o) const { return *this + (-o); }

FieldElt FieldElt::operator-() const {
  std::vector<Rational> v(c_);
  for (auto& x : v) x = -x;
  return FieldElt(K_, std::move(v));
}

FieldElt FieldElt::operator*(const FieldElt& o) const {
  require_same_field(*this, o);
  RatPoly prod = repr_poly() * o.repr_poly();
  std::vector<Rational> v(prod.coeffs());
  return FieldElt(K_, std::move(v));  // constructor reduces mod defining poly
}

FieldElt FieldElt::operator*(const Rational& s) const {
  std::vector<Rational> v(c_);
  for (auto& x : v) x *= s;
  return FieldElt(K_, std::move(v));
}

FieldElt FieldElt::operator/(const Rational& s) const {
  if (s == 0) throw std::domain_error("division by zero");
  return *this * Rational(1 / s);
}

FieldElt FieldElt::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative element power");
  FieldElt acc = K_.one();
  for (int i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

bool FieldElt::operator==(const FieldElt& o) const {
  if (!K_.same_field(o.K_)) return false;
  return c_ == o.c_;
}

RatPoly FieldElt::repr_poly() const { return RatPoly(std::vector<Rational>(c_)); }

Valuation valuation(const FieldElt& x) {
  if (x.is_zero()) return Valuation::infinity();
  Rational norm = resultant(x.field().defining_poly(), x.repr_poly());
  Valuation v = padic_valuation(x.field().p(), norm);
  return Valuation(Rational(v.value() / x.field().degree()));
}

AbsValue abs_value(const FieldElt& x) { return AbsValue::from_exponent(valuation(x)); }

std::string ResidueElt::str() const {
  return value.str("t");
}

ResidueElt residue_reduce(const FieldElt& x) {
  Valuation v = valuation(x);
  if (v < Valuation(0))
    throw std::domain_error("element with negative valuation " + v.str() + " has no residue");
  const ExtField& K = x.field();
  unsigned long p = K.p();
  if (K.kind() == FieldKind::unramified) {
    // Orthonormal basis: v(x) >= 0 forces every coordinate to be p-integral.
    std::vector<std::uint64_t> c;
    c.reserve(x.coords().size());
    for (const auto& b : x.coords()) c.push_back(rational_mod_p(b, p));
    return ResidueElt{FpPoly(p, std::move(c)), K.residue_modulus()};
  }
  // Trivial or Eisenstein kind: residue field F_p, and all coordinates above
  // the constant one reduce to zero (their valuations are positive).
  return ResidueElt{FpPoly::constant(p, rational_mod_p(x.coord(0), p)), FpPoly(p)};
}

FieldElt embed(const FieldElt& x, const ExtField& K) {
  if (x.field().same_field(K)) return K.element(std::vector<Rational>(x.coords()));
  if (!x.field().embeds_into(K))
    throw std::invalid_argument("no declared tower embeds " + x.field().id() + " into " + K.id());
  return K.from_rational(x.coord(0));
}

}  // namespace berktree
