#include "berktree/hopf_norms.hpp"

#include <algorithm>
#include <stdexcept>

namespace berktree {

namespace {

Rational rational_int_pow(const Rational& base, long k) {
  if (base == 0) throw std::domain_error("zero base in integer power");
  Rational acc(1);
  long n = k < 0 ? -k : k;
  for (long i = 0; i < n; ++i) acc *= base;
  if (k < 0) acc = 1 / acc;
  return acc;
}

void require_same_family(unsigned long pa, int ra, unsigned long pb, int rb) {
  if (pa != pb) throw std::invalid_argument("norms over different primes");
  if (ra != rb) throw std::invalid_argument("norms of different ranks");
}

std::string character_name(size_t i) { return "chi_" + std::to_string(i + 1); }

}  // namespace

LaurentPoly::LaurentPoly(int rank) : rank_(rank) {
  if (rank < 0) throw std::invalid_argument("negative rank");
}

LaurentPoly::LaurentPoly(int rank, std::vector<LaurentTerm> terms)
    : rank_(rank), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (static_cast<int>(t.exps.size()) != rank_)
      throw std::invalid_argument("term arity does not match the rank");
  normalize();
}

LaurentPoly LaurentPoly::constant(int rank, const Rational& c) {
  return LaurentPoly(rank, {LaurentTerm{std::vector<long>(static_cast<size_t>(rank), 0), c}});
}

LaurentPoly LaurentPoly::character(std::vector<long> u, const Rational& c) {
  int rank = static_cast<int>(u.size());
  return LaurentPoly(rank, {LaurentTerm{std::move(u), c}});
}

void LaurentPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const LaurentTerm& a, const LaurentTerm& b) { return a.exps < b.exps; });
  std::vector<LaurentTerm> out;
  for (auto& t : terms_) {
    if (!out.empty() && out.back().exps == t.exps)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const LaurentTerm& t) { return t.coeff == 0; }),
            out.end());
  terms_ = std::move(out);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (rank_ != o.rank_) throw std::invalid_argument("rank mismatch");
  std::vector<LaurentTerm> v(terms_);
  v.insert(v.end(), o.terms_.begin(), o.terms_.end());
  return LaurentPoly(rank_, std::move(v));
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  if (rank_ != o.rank_) throw std::invalid_argument("rank mismatch");
  std::vector<LaurentTerm> v(terms_);
  for (const auto& t : o.terms_) v.push_back(LaurentTerm{t.exps, -t.coeff});
  return LaurentPoly(rank_, std::move(v));
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (rank_ != o.rank_) throw std::invalid_argument("rank mismatch");
  std::vector<LaurentTerm> v;
  v.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      std::vector<long> e(a.exps);
      for (size_t i = 0; i < e.size(); ++i) e[i] += b.exps[i];
      v.push_back(LaurentTerm{std::move(e), Rational(a.coeff * b.coeff)});
    }
  return LaurentPoly(rank_, std::move(v));
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  if (rank_ != o.rank_ || terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].exps != o.terms_[i].exps || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

MonomialNorm::MonomialNorm(unsigned long p, std::vector<Rational> weight_exps)
    : p_(p), q_(std::move(weight_exps)) {
  if (q_.empty()) throw std::invalid_argument("monomial norm needs rank at least 1");
}

AbsValue MonomialNorm::character_weight(const std::vector<long>& u) const {
  if (u.size() != q_.size()) throw std::invalid_argument("character arity mismatch");
  Rational e(0);
  for (size_t i = 0; i < u.size(); ++i) e += q_[i] * u[i];
  return AbsValue::from_exponent(Valuation(e));
}

BallNorm::BallNorm(unsigned long p, Rational radius_exp) : p_(p), q_(std::move(radius_exp)) {}

RationalPoint::RationalPoint(unsigned long p, std::vector<Rational> coords)
    : p_(p), g_(std::move(coords)) {
  if (g_.empty()) throw std::invalid_argument("rational point needs rank at least 1");
  for (const auto& c : g_)
    if (c == 0) throw std::invalid_argument("torus points have nonzero coordinates");
}

RationalPoint RationalPoint::identity(unsigned long p, int rank) {
  return RationalPoint(p, std::vector<Rational>(static_cast<size_t>(rank), Rational(1)));
}

bool RationalPoint::is_identity() const {
  for (const auto& c : g_)
    if (c != 1) return false;
  return true;
}

RationalPoint RationalPoint::operator*(const RationalPoint& o) const {
  require_same_family(p_, rank(), o.p_, o.rank());
  std::vector<Rational> v(g_);
  for (size_t i = 0; i < v.size(); ++i) v[i] *= o.g_[i];
  return RationalPoint(p_, std::move(v));
}

RationalPoint RationalPoint::inverse() const {
  std::vector<Rational> v(g_);
  for (auto& c : v) c = 1 / c;
  return RationalPoint(p_, std::move(v));
}

AbsValue norm_eval(const LaurentPoly& f, const MonomialNorm& x) {
  AbsValue best = AbsValue::zero();
  for (const auto& t : f.terms()) {
    AbsValue coeff = AbsValue::from_exponent(padic_valuation(x.p(), t.coeff));
    best = max(best, coeff * x.character_weight(t.exps));
  }
  return best;
}

AbsValue norm_eval(const RatPoly& f, const BallNorm& x) {
  AbsValue best = AbsValue::zero();
  AbsValue r = x.radius();
  for (int i = 0; i <= f.degree(); ++i) {
    AbsValue coeff = AbsValue::from_exponent(padic_valuation(x.p(), f.coeff(i)));
    best = max(best, coeff * r.pow(i));
  }
  return best;
}

AbsValue eval_at_point(const LaurentPoly& f, const RationalPoint& g) {
  Rational acc(0);
  for (const auto& t : f.terms()) {
    Rational v = t.coeff;
    for (size_t i = 0; i < t.exps.size(); ++i) v *= rational_int_pow(g.coords()[i], t.exps[i]);
    acc += v;
  }
  return AbsValue::from_exponent(padic_valuation(g.p(), acc));
}

MonomialNorm shilov_point(unsigned long p, int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be at least 1");
  return MonomialNorm(p, std::vector<Rational>(static_cast<size_t>(rank), Rational(0)));
}

bool leq_norm(const MonomialNorm& x, const MonomialNorm& y) {
  require_same_family(x.p(), x.rank(), y.p(), y.rank());
  // Testing on each character and its inverse pins both inequalities, so
  // domination collapses to componentwise equality of weights.
  return x.weight_exps() == y.weight_exps();
}

bool leq_norm(const BallNorm& x, const BallNorm& y) {
  if (x.p() != y.p()) throw std::invalid_argument("norms over different primes");
  return x.radius() <= y.radius();
}

MonomialNorm convolve(const MonomialNorm& x, const MonomialNorm& y) {
  require_same_family(x.p(), x.rank(), y.p(), y.rank());
  // Comultiplication is diagonal on characters, so weights multiply.
  std::vector<Rational> q(x.weight_exps());
  for (size_t i = 0; i < q.size(); ++i) q[i] += y.weight_exps()[i];
  return MonomialNorm(x.p(), std::move(q));
}

BallNorm convolve(const BallNorm& x, const BallNorm& y) {
  if (x.p() != y.p()) throw std::invalid_argument("norms over different primes");
  // Delta(a) = a (x) 1 + 1 (x) a; the canonical decomposition is orthogonal
  // and its endpoint terms have unit coefficients, so the max is attained.
  return BallNorm(x.p(), min(Valuation(x.radius_exp()), Valuation(y.radius_exp())).value());
}

MonomialNorm convolve(const MonomialNorm& x, const RationalPoint& g) {
  require_same_family(x.p(), x.rank(), g.p(), g.rank());
  // Translation: the weight of each coordinate character scales by |g_i|.
  std::vector<Rational> q(x.weight_exps());
  for (size_t i = 0; i < q.size(); ++i) {
    Valuation v = padic_valuation(x.p(), g.coords()[i]);
    q[i] += v.value();
  }
  return MonomialNorm(x.p(), std::move(q));
}

BallNorm convolve(const BallNorm& x, const Rational& c) {
  Valuation vc = padic_valuation(x.p(), c);
  if (vc < Valuation(x.radius_exp()))
    throw std::invalid_argument(
        "translation by a point outside the ball leaves the centered-ball family");
  return x;
}

MonomialNorm inv_norm(const MonomialNorm& x) {
  std::vector<Rational> q(x.weight_exps());
  for (auto& e : q) e = -e;
  return MonomialNorm(x.p(), std::move(q));
}

BallNorm inv_norm(const BallNorm& x) { return x; }

EnvelopeCheck envelope_check(const MonomialNorm& x) {
  EnvelopeCheck c;
  // 1 dominated: every character weight must be >= 1 = |chi(1)|; a group
  // homomorphism Z^n -> R_+ that is >= 1 everywhere is identically 1.
  c.unit_ok = true;
  for (const auto& q : x.weight_exps())
    if (q != 0) c.unit_ok = false;
  c.inv_ok = leq_norm(inv_norm(x), x);
  c.idem_ok = leq_norm(convolve(x, x), x);
  c.bounded_ok = true;
  return c;
}

EnvelopeCheck envelope_check(const BallNorm& x) {
  EnvelopeCheck c;
  c.unit_ok = true;  // |f(0)| = |c_0| is one of the max terms
  c.inv_ok = leq_norm(inv_norm(x), x);
  c.idem_ok = leq_norm(convolve(x, x), x);
  c.bounded_ok = true;
  return c;
}

namespace {
bool in_value_group(const Rational& exp, const ExtField& K) {
  long e = K.kind() == FieldKind::eisenstein ? K.degree() : 1;
  Rational scaled = exp * e;
  return scaled.get_den() == 1;
}
}  // namespace

MonomialBaseChange base_change_norm(const MonomialNorm& x, const ExtField& K) {
  if (x.p() != K.p()) throw std::invalid_argument("base change to a field over a different prime");
  std::vector<bool> flags;
  flags.reserve(x.weight_exps().size());
  for (const auto& q : x.weight_exps()) flags.push_back(in_value_group(q, K));
  return MonomialBaseChange{x, std::move(flags)};
}

BallBaseChange base_change_norm(const BallNorm& x, const ExtField& K) {
  if (x.p() != K.p()) throw std::invalid_argument("base change to a field over a different prime");
  return BallBaseChange{x, in_value_group(x.radius_exp(), K)};
}

TorusTheoremReport theorem_conditions_torus(const MonomialNorm& x) {
  TorusTheoremReport rep;
  rep.universal = true;  // monomial norms are universal: the monomial basis is orthogonal
  EnvelopeCheck env = envelope_check(x);
  rep.envelope = env.inv_ok && env.idem_ok;
  MonomialNorm o = shilov_point(x.p(), x.rank());
  rep.dominates_shilov = leq_norm(o, x);
  for (size_t i = 0; i < x.weight_exps().size(); ++i) {
    if (x.weight_exps()[i] != 0) {
      if (!rep.envelope && !rep.witness_ii) rep.witness_ii = character_name(i);
      if (!rep.dominates_shilov && !rep.witness_iii) rep.witness_iii = character_name(i);
    }
  }
  // Domination is equality-only on this family, so maximality among
  // monomial norms reduces to the first three conditions.
  rep.maximal_in_family = rep.universal && rep.envelope && rep.dominates_shilov;
  rep.is_shilov_point = x == o;
  return rep;
}

std::vector<std::pair<RatPoly, RatPoly>> additive_comultiplication_terms(int n) {
  if (n < 0) throw std::invalid_argument("negative power");
  std::vector<std::pair<RatPoly, RatPoly>> out;
  out.reserve(static_cast<size_t>(n) + 1);
  Integer binom(1);
  for (int i = 0; i <= n; ++i) {
    out.emplace_back(RatPoly::monomial(Rational(binom), i), RatPoly::monomial(Rational(1), n - i));
    binom = binom * (n - i) / (i + 1);
  }
  return out;
}

AbsValue decomposition_value(const std::vector<std::pair<RatPoly, RatPoly>>& decomposition,
                             const BallNorm& x, const BallNorm& y) {
  AbsValue best = AbsValue::zero();
  for (const auto& [b, c] : decomposition) best = max(best, norm_eval(b, x) * norm_eval(c, y));
  return best;
}

}  // namespace berktree
