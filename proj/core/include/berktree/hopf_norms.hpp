#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "berktree/ext_field.hpp"
#include "berktree/rational_poly.hpp"
#include "berktree/valuation.hpp"

namespace berktree {

/// One Laurent term c * x1^(u1) * ... * xn^(un).
struct LaurentTerm {
  std::vector<long> exps;
  Rational coeff;
};

/// Laurent polynomial in n variables over Q: the coordinate ring of the
/// split torus of rank n. Terms are combined and kept sorted.
class LaurentPoly {
 public:
  explicit LaurentPoly(int rank);
  LaurentPoly(int rank, std::vector<LaurentTerm> terms);

  static LaurentPoly constant(int rank, const Rational& c);
  /// The character x^u.
  static LaurentPoly character(std::vector<long> u, const Rational& c = Rational(1));

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<LaurentTerm>& terms() const { return terms_; }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly& o) const;

 private:
  void normalize();
  int rank_;
  std::vector<LaurentTerm> terms_;
};

/// A multiplicative monomial seminorm on the rank-n torus coordinate ring:
/// per-coordinate character weights r_i = p^(-q_i), all finite and nonzero,
/// extended to characters multiplicatively and to sums by the maximum.
class MonomialNorm {
 public:
  MonomialNorm(unsigned long p, std::vector<Rational> weight_exps);

  unsigned long p() const { return p_; }
  int rank() const { return static_cast<int>(q_.size()); }
  const std::vector<Rational>& weight_exps() const { return q_; }
  /// Weight of the character x^u as an absolute value.
  AbsValue character_weight(const std::vector<long>& u) const;

  bool operator==(const MonomialNorm& o) const { return p_ == o.p_ && q_ == o.q_; }
  bool operator!=(const MonomialNorm& o) const { return !(*this == o); }

 private:
  unsigned long p_;
  std::vector<Rational> q_;
};

/// The Gauss norm of the ball E(0, r) on the coordinate ring of the
/// additive group: |sum c_i a^i| = max |c_i| r^i, radius finite nonzero.
class BallNorm {
 public:
  BallNorm(unsigned long p, Rational radius_exp);

  unsigned long p() const { return p_; }
  const Rational& radius_exp() const { return q_; }
  AbsValue radius() const { return AbsValue::from_exponent(Valuation(q_)); }

  bool operator==(const BallNorm& o) const { return p_ == o.p_ && q_ == o.q_; }
  bool operator!=(const BallNorm& o) const { return !(*this == o); }

 private:
  unsigned long p_;
  Rational q_;
};

/// A rational point of the torus (nonzero coordinates), carried as its
/// evaluation seminorm f -> |f(g)|. This is the monoid unit when all
/// coordinates are 1; it is not a monomial norm otherwise.
class RationalPoint {
 public:
  RationalPoint(unsigned long p, std::vector<Rational> coords);
  static RationalPoint identity(unsigned long p, int rank);

  unsigned long p() const { return p_; }
  int rank() const { return static_cast<int>(g_.size()); }
  const std::vector<Rational>& coords() const { return g_; }
  bool is_identity() const;

  RationalPoint operator*(const RationalPoint& o) const;  // componentwise
  RationalPoint inverse() const;

 private:
  unsigned long p_;
  std::vector<Rational> g_;
};

/// max over terms of |coefficient| * weight(monomial); exact.
AbsValue norm_eval(const LaurentPoly& f, const MonomialNorm& x);
AbsValue norm_eval(const RatPoly& f, const BallNorm& x);
/// Evaluation seminorm |f(g)| at a rational point.
AbsValue eval_at_point(const LaurentPoly& f, const RationalPoint& g);

/// The unique Shilov point of the unit-ball subtorus: all weights 1.
MonomialNorm shilov_point(unsigned long p, int rank);

/// Domination order: |f(x)| <= |f(y)| for all f. On monomial norms,
/// testing characters and their inverses forces componentwise equality;
/// on ball norms it is radius containment.
bool leq_norm(const MonomialNorm& x, const MonomialNorm& y);
bool leq_norm(const BallNorm& x, const BallNorm& y);

/// Convolution through the comultiplication, computed on the canonical
/// (orthogonal) decompositions: weights multiply componentwise on the
/// torus; radii take the maximum on the additive group.
MonomialNorm convolve(const MonomialNorm& x, const MonomialNorm& y);
BallNorm convolve(const BallNorm& x, const BallNorm& y);

/// Translation by a rational point: x * ev_g. Stays monomial on the torus
/// (weights scale by |g_i|). On the additive group only translations with
/// |c| <= r stay in the centered-ball family; others are rejected.
MonomialNorm convolve(const MonomialNorm& x, const RationalPoint& g);
BallNorm convolve(const BallNorm& x, const Rational& c);

/// Pushforward along inversion: weights invert on the torus; ball norms
/// are preserved.
MonomialNorm inv_norm(const MonomialNorm& x);
BallNorm inv_norm(const BallNorm& x);

/// The envelope-subgroup conditions: 1 dominated, inversion-stable,
/// convolution-idempotent, bounded.
struct EnvelopeCheck {
  bool unit_ok = false;
  bool inv_ok = false;
  bool idem_ok = false;
  bool bounded_ok = false;
  bool all() const { return unit_ok && inv_ok && idem_ok && bounded_ok; }
};
EnvelopeCheck envelope_check(const MonomialNorm& x);
EnvelopeCheck envelope_check(const BallNorm& x);

/// Base change to K: for these orthogonal families the canonical
/// decomposition realizes the defining infimum, so the weight data is
/// unchanged; the flags record which exponents land in the value group
/// (1/e)Z of K.
struct MonomialBaseChange {
  MonomialNorm norm;
  std::vector<bool> weight_exp_in_value_group;
};
struct BallBaseChange {
  BallNorm norm;
  bool radius_exp_in_value_group;
};
MonomialBaseChange base_change_norm(const MonomialNorm& x, const ExtField& K);
BallBaseChange base_change_norm(const BallNorm& x, const ExtField& K);

/// The four characterization conditions for a monomial norm, decided
/// within the monomial family (maximality included); witnesses name a
/// character falsifying a failed condition.
struct TorusTheoremReport {
  bool universal = false;            // (i)
  bool envelope = false;             // (ii) x*x and inv(x) dominated by x
  bool dominates_shilov = false;     // (iii)
  bool maximal_in_family = false;    // (iv)
  std::optional<std::string> witness_ii;
  std::optional<std::string> witness_iii;
  bool is_shilov_point = false;      // conclusion: x equals the Shilov point
  bool all() const { return universal && envelope && dominates_shilov && maximal_in_family; }
};
TorusTheoremReport theorem_conditions_torus(const MonomialNorm& x);

/// The canonical decomposition of the comultiplication of a^n on the
/// additive group: pairs (binom(n,i) X^i, X^(n-i)).
std::vector<std::pair<RatPoly, RatPoly>> additive_comultiplication_terms(int n);

/// Value max_j |b_j(x)| |c_j(y)| of an arbitrary tensor decomposition; any
/// valid decomposition of the comultiplication bounds the convolution value
/// from above, with equality for the canonical one.
AbsValue decomposition_value(const std::vector<std::pair<RatPoly, RatPoly>>& decomposition,
                             const BallNorm& x, const BallNorm& y);

}  // namespace berktree
