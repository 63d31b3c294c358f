#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "berktree/bt_tree.hpp"

namespace berktree {

/// Deterministic sampling helper: identical sequences for identical seeds
/// (bounded draws are hand-rolled so the stream does not depend on the
/// standard library's distribution implementations).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  /// Uniform integer in [lo, hi], inclusive.
  long uniform(long lo, long hi);
  /// Uniform pick from a non-empty list.
  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<size_t>(uniform(0, static_cast<long>(v.size()) - 1))];
  }

 private:
  std::mt19937_64 eng_;
};

/// Random Eisenstein polynomial of the given degree over Q_p: constant term
/// u*p with u a small unit, middle coefficients random multiples of p with
/// p-power exponent at most 3.
RatPoly random_eisenstein(Rng& rng, unsigned long p, int degree);

/// Random rational with valuation in [min_val, max_val] and small unit part
/// (zero is never produced).
Rational random_rational(Rng& rng, unsigned long p, long min_val, long max_val);

/// Random element of K with coordinate valuations in [min_val, max_val];
/// coordinates may vanish.
FieldElt random_element(Rng& rng, const ExtField& K, long min_val, long max_val);

/// Random ball point over K: random center and a radius exponent that is
/// either finite with small denominator or +infinity when allow_type1.
BerkPoint random_ball_point(Rng& rng, const ExtField& K, bool allow_type1 = false);

enum class SweepMode { tame, wild_prime, equivalence };

SweepMode parse_sweep_mode(const std::string& s);
std::string to_string(SweepMode m);

/// Outcome of a property sweep over random Eisenstein inputs. Failures
/// carry the offending polynomial; the divergence log records samples where
/// flag (d) holds without (c) (expected for wild non-prime-power degrees,
/// logged but never asserted against).
struct SweepResult {
  SweepMode mode = SweepMode::tame;
  int requested = 0;
  int passes = 0;
  std::vector<std::string> failures;
  std::vector<std::string> divergence_log;
  bool ok() const { return failures.empty() && passes == requested; }
};

SweepResult run_sweep(SweepMode mode, int count, std::uint64_t seed);

}  // namespace berktree
