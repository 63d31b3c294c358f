#include "berktree/fp_poly.hpp"

#include <stdexcept>

namespace berktree {

namespace {

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // extended Euclid; p prime, a != 0 mod p
  std::int64_t t = 0, newt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a % p);
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw std::domain_error("not invertible mod p");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

std::vector<std::uint64_t> prime_factors(int n) {
  std::vector<std::uint64_t> out;
  int m = n;
  for (int d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(static_cast<std::uint64_t>(d));
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) out.push_back(static_cast<std::uint64_t>(m));
  return out;
}

}  // namespace

std::uint64_t rational_mod_p(const Rational& x, std::uint64_t p) {
  Integer num = x.get_num();
  Integer den = x.get_den();
  Integer P(static_cast<unsigned long>(p));
  if (mpz_divisible_p(den.get_mpz_t(), P.get_mpz_t()))
    throw std::domain_error("rational with denominator divisible by p has no residue");
  Integer n = num % P;
  if (n < 0) n += P;
  Integer d = den % P;
  std::uint64_t dres = d.get_ui();
  std::uint64_t nres = n.get_ui();
  return (nres * mod_inverse(dres, p)) % p;
}

FpPoly::FpPoly(std::uint64_t p) : p_(p) {
  if (p < 2) throw std::invalid_argument("modulus must be at least 2");
}

FpPoly::FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  if (p < 2) throw std::invalid_argument("modulus must be at least 2");
  for (auto& x : c_) x %= p_;
  trim();
}

FpPoly FpPoly::from_rational_poly(const RatPoly& f, std::uint64_t p) {
  std::vector<std::uint64_t> v;
  v.reserve(static_cast<size_t>(f.degree() + 1));
  for (int i = 0; i <= f.degree(); ++i) v.push_back(rational_mod_p(f.coeff(i), p));
  return FpPoly(p, std::move(v));
}

FpPoly FpPoly::constant(std::uint64_t p, std::uint64_t c) { return FpPoly(p, {c}); }

FpPoly FpPoly::variable(std::uint64_t p) { return FpPoly(p, {0, 1}); }

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint64_t FpPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<size_t>(i)];
}

std::uint64_t FpPoly::leading() const {
  if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return c_.back();
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
  if (p_ != o.p_) throw std::invalid_argument("mixed moduli");
  std::vector<std::uint64_t> v(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] = (v[i] + o.c_[i]) % p_;
  return FpPoly(p_, std::move(v));
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
  if (p_ != o.p_) throw std::invalid_argument("mixed moduli");
  std::vector<std::uint64_t> v(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] = (v[i] + p_ - o.c_[i]) % p_;
  return FpPoly(p_, std::move(v));
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
  if (p_ != o.p_) throw std::invalid_argument("mixed moduli");
  if (is_zero() || o.is_zero()) return FpPoly(p_);
  std::vector<std::uint64_t> v(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j)
      v[i + j] = (v[i + j] + c_[i] * o.c_[j]) % p_;
  return FpPoly(p_, std::move(v));
}

std::string FpPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= degree(); ++i) {
    std::uint64_t c = coeff(i);
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c) + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

FpPoly rem(const FpPoly& a, const FpPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  std::uint64_t p = a.prime();
  std::vector<std::uint64_t> r(a.coeffs());
  std::uint64_t lead_inv = mod_inverse(b.leading(), p);
  int db = b.degree();
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    std::uint64_t c = (r[static_cast<size_t>(i)] * lead_inv) % p;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) {
      size_t k = static_cast<size_t>(i - db + j);
      r[k] = (r[k] + p * p - c * b.coeff(j) % p) % p;
    }
  }
  if (static_cast<int>(r.size()) > db) r.resize(static_cast<size_t>(db > 0 ? db : 0));
  return FpPoly(p, std::move(r));
}

FpPoly monic_gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = rem(a, b);
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  std::uint64_t inv = mod_inverse(a.leading(), a.prime());
  return a * FpPoly::constant(a.prime(), inv);
}

FpPoly pow_mod(const FpPoly& base, const Integer& exp, const FpPoly& m) {
  if (exp < 0) throw std::invalid_argument("negative exponent");
  FpPoly result = FpPoly::constant(base.prime(), 1);
  FpPoly b = rem(base, m);
  size_t nbits = mpz_sizeinbase(exp.get_mpz_t(), 2);
  if (exp == 0) return result;
  for (size_t i = nbits; i-- > 0;) {
    result = rem(result * result, m);
    if (mpz_tstbit(exp.get_mpz_t(), i)) result = rem(result * b, m);
  }
  return result;
}

FpPoly shifted_power(std::uint64_t p, std::uint64_t root, int n, std::uint64_t lead) {
  FpPoly factor(p, {(p - root % p) % p, 1});
  FpPoly acc = FpPoly::constant(p, lead);
  for (int i = 0; i < n; ++i) acc = acc * factor;
  return acc;
}

bool is_irreducible(const FpPoly& f) {
  int d = f.degree();
  if (d < 1) throw std::invalid_argument("irreducibility is only defined for nonconstant polynomials");
  if (d == 1) return true;
  std::uint64_t p = f.prime();
  Integer P(static_cast<unsigned long>(p));
  FpPoly x = FpPoly::variable(p);
  // x^(p^d) == x mod f, and gcd(x^(p^(d/q)) - x, f) == 1 for prime q | d.
  Integer pd;
  mpz_pow_ui(pd.get_mpz_t(), P.get_mpz_t(), static_cast<unsigned long>(d));
  if (pow_mod(x, pd, f) != rem(x, f)) return false;
  for (std::uint64_t q : prime_factors(d)) {
    Integer pk;
    mpz_pow_ui(pk.get_mpz_t(), P.get_mpz_t(), static_cast<unsigned long>(d) / q);
    FpPoly g = pow_mod(x, pk, f) - rem(x, f);
    FpPoly common = monic_gcd(f, g);
    if (common.degree() != 0) return false;
  }
  return true;
}

}  // namespace berktree
