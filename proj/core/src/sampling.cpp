#include "berktree/sampling.hpp"

#include <limits>
#include <stdexcept>

#include "berktree/poly_text.hpp"

namespace berktree {

long Rng::uniform(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection sampling keeps the draw unbiased and the stream portable.
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / span * span;
  std::uint64_t x;
  do {
    x = eng_();
  } while (x >= limit);
  return lo + static_cast<long>(x % span);
}

RatPoly random_eisenstein(Rng& rng, unsigned long p, int degree) {
  if (degree < 2) throw std::invalid_argument("degree must be at least 2");
  long pl = static_cast<long>(p);
  std::vector<Rational> c(static_cast<size_t>(degree) + 1, Rational(0));
  c.back() = 1;

  // Constant term u * p, u a small unit.
  long u = 0;
  while (u == 0 || u % pl == 0) u = rng.uniform(-9, 9);
  c[0] = Rational(u * pl);

  // Middle coefficients: m * p^j with j <= 3; m == 0 keeps the slot empty.
  for (int i = 1; i < degree; ++i) {
    long m = rng.uniform(-4, 4);
    if (m == 0) continue;
    long j = rng.uniform(1, 3);
    Rational pw(1);
    for (long t = 0; t < j; ++t) pw *= pl;
    c[static_cast<size_t>(i)] = Rational(m) * pw;
  }
  return RatPoly(std::move(c));
}

Rational random_rational(Rng& rng, unsigned long p, long min_val, long max_val) {
  long pl = static_cast<long>(p);
  long unit = 0;
  while (unit == 0 || unit % pl == 0) unit = rng.uniform(-9, 9);
  long denom_unit = 0;
  while (denom_unit == 0 || denom_unit % pl == 0) denom_unit = rng.uniform(1, 9);
  long v = rng.uniform(min_val, max_val);
  Rational x = make_rational(unit, denom_unit);
  Rational pw(1);
  for (long t = 0; t < (v < 0 ? -v : v); ++t) pw *= pl;
  return v >= 0 ? Rational(x * pw) : Rational(x / pw);
}

FieldElt random_element(Rng& rng, const ExtField& K, long min_val, long max_val) {
  std::vector<Rational> coords;
  coords.reserve(static_cast<size_t>(K.degree()));
  for (int i = 0; i < K.degree(); ++i) {
    if (rng.uniform(0, 4) == 0) {
      coords.push_back(Rational(0));
    } else {
      coords.push_back(random_rational(rng, K.p(), min_val, max_val));
    }
  }
  return K.element(std::move(coords));
}

BerkPoint random_ball_point(Rng& rng, const ExtField& K, bool allow_type1) {
  FieldElt center = random_element(rng, K, -2, 3);
  if (allow_type1 && rng.uniform(0, 5) == 0)
    return BerkPoint(center, AbsValue::zero());
  long num = rng.uniform(-6, 6);
  long den = rng.uniform(1, 3);
  return BerkPoint(center, AbsValue::from_exponent(Valuation(make_rational(num, den))));
}

SweepMode parse_sweep_mode(const std::string& s) {
  if (s == "tame") return SweepMode::tame;
  if (s == "wild-prime") return SweepMode::wild_prime;
  if (s == "equivalence") return SweepMode::equivalence;
  throw std::invalid_argument("unknown sweep mode: " + s + " (expected tame|wild-prime|equivalence)");
}

std::string to_string(SweepMode m) {
  switch (m) {
    case SweepMode::tame: return "tame";
    case SweepMode::wild_prime: return "wild-prime";
    case SweepMode::equivalence: return "equivalence";
  }
  return "?";
}

SweepResult run_sweep(SweepMode mode, int count, std::uint64_t seed) {
  SweepResult res;
  res.mode = mode;
  res.requested = count;
  Rng rng(seed);

  const std::vector<unsigned long> tame_primes{2, 3, 5, 7};
  const std::vector<unsigned long> wild_primes{2, 3, 5};

  for (int n = 0; n < count; ++n) {
    unsigned long p = 0;
    int degree = 0;
    switch (mode) {
      case SweepMode::tame:
        p = rng.pick(tame_primes);
        do {
          degree = static_cast<int>(rng.uniform(2, 6));
        } while (degree % static_cast<int>(p) == 0);
        break;
      case SweepMode::wild_prime:
        p = rng.pick(wild_primes);
        degree = static_cast<int>(p);
        break;
      case SweepMode::equivalence:
        p = rng.pick(tame_primes);
        degree = static_cast<int>(rng.uniform(2, 6));
        break;
    }

    RatPoly poly = random_eisenstein(rng, p, degree);
    GaloisOrbitReport rep = galois_fixed_report(p, poly);
    std::string label = "p=" + std::to_string(p) + ", P=" + format_poly(poly, "T");

    bool ok = true;
    switch (mode) {
      case SweepMode::tame:
        ok = rep.r == rep.r_prime && !rep.fixed_segment.has_value();
        break;
      case SweepMode::wild_prime:
        ok = rep.r < rep.r_prime && rep.fixed_segment.has_value() && rep.cond_paths_outside &&
             rep.cond_open_ball && rep.cond_q_roots && rep.cond_e_vanishes;
        break;
      case SweepMode::equivalence:
        ok = rep.cond_paths_outside == rep.cond_open_ball &&
             rep.cond_open_ball == rep.cond_q_roots &&
             (!rep.cond_q_roots || rep.cond_e_vanishes);  // (c) => (d), e >= 2 here
        if (rep.cond_e_vanishes && !rep.cond_q_roots)
          res.divergence_log.push_back(label + " [e=" + std::to_string(rep.e) +
                                       ": (d) holds, (c) fails]");
        break;
    }

    if (ok)
      ++res.passes;
    else
      res.failures.push_back(label);
  }
  return res;
}

}  // namespace berktree
