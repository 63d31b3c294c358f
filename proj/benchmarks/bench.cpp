#include <benchmark/benchmark.h>

#include "berktree/berkovich.hpp"
#include "berktree/bt_tree.hpp"
#include "berktree/hopf_norms.hpp"
#include "berktree/poly_text.hpp"
#include "berktree/sampling.hpp"

using namespace berktree;

namespace {

ExtField quadratic() { return ExtField::make(2, parse_poly("T^2 - 2")); }

void BM_GaloisFixedReportDeg2(benchmark::State& state) {
  RatPoly P = parse_poly("T^2 - 2");
  for (auto _ : state) {
    GaloisOrbitReport rep = galois_fixed_report(2, P);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_GaloisFixedReportDeg2);

void BM_GaloisFixedReportDeg6(benchmark::State& state) {
  RatPoly P = parse_poly("T^6 + 12*T^4 - 9*T^3 + 18*T - 6");
  for (auto _ : state) {
    GaloisOrbitReport rep = galois_fixed_report(3, P);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_GaloisFixedReportDeg6);

void BM_ElementValuation(benchmark::State& state) {
  ExtField K = quadratic();
  Rng rng(1);
  std::vector<FieldElt> elts;
  for (int i = 0; i < 64; ++i) elts.push_back(random_element(rng, K, -3, 3));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(valuation(elts[i++ % elts.size()]));
  }
}
BENCHMARK(BM_ElementValuation);

void BM_NewtonPolygon(benchmark::State& state) {
  ExtField K = ExtField::make(3, parse_poly("T^3 - 3"));
  KPoly shifted = taylor_shift(KPoly::lift(K.defining_poly(), K), K.generator());
  for (auto _ : state) {
    benchmark::DoNotOptimize(newton_polygon(shifted, true));
  }
}
BENCHMARK(BM_NewtonPolygon);

void BM_SeminormEval(benchmark::State& state) {
  ExtField K = quadratic();
  Rng rng(2);
  std::vector<FieldElt> c;
  for (int i = 0; i < 6; ++i) c.push_back(random_element(rng, K, -2, 3));
  KPoly f(K, c);
  BerkPoint x = random_ball_point(rng, K, false);
  for (auto _ : state) {
    benchmark::DoNotOptimize(seminorm_eval(f, x));
  }
}
BENCHMARK(BM_SeminormEval);

void BM_JoinAndOrder(benchmark::State& state) {
  ExtField K = quadratic();
  Rng rng(3);
  std::vector<BerkPoint> pts;
  for (int i = 0; i < 64; ++i) pts.push_back(random_ball_point(rng, K, true));
  size_t i = 0;
  for (auto _ : state) {
    const BerkPoint& a = pts[i % pts.size()];
    const BerkPoint& b = pts[(i + 17) % pts.size()];
    benchmark::DoNotOptimize(leq(a, join(a, b)));
    ++i;
  }
}
BENCHMARK(BM_JoinAndOrder);

void BM_SweepSample(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_sweep(SweepMode::equivalence, 1, seed++));
  }
}
BENCHMARK(BM_SweepSample);

void BM_TheoremGridRank2(benchmark::State& state) {
  std::vector<Rational> grid{Rational(-2), Rational(-1), Rational(0), Rational(1), Rational(2)};
  for (auto _ : state) {
    int passes = 0;
    for (const auto& a : grid)
      for (const auto& b : grid)
        if (theorem_conditions_torus(MonomialNorm(2, {a, b})).all()) ++passes;
    benchmark::DoNotOptimize(passes);
  }
}
BENCHMARK(BM_TheoremGridRank2);

}  // namespace

BENCHMARK_MAIN();
