#include <benchmark/benchmark.h>

#include "postwitt/classify.hpp"
#include "postwitt/rota_baxter.hpp"
#include "postwitt/verify.hpp"

using namespace postwitt;

namespace {

void BM_PolyMul(benchmark::State& state) {
  const PolyScalar a = PolyScalar::param(Param::a);
  const PolyScalar b = PolyScalar::param(Param::b);
  const PolyScalar x = Rational(3, 2) * a * a + Rational(-2) * b + PolyScalar(1);
  const PolyScalar y = a * b - Rational(1, 3) * b * b + PolyScalar(7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(x * y);
  }
}
BENCHMARK(BM_PolyMul);

void BM_BracketSweep(benchmark::State& state) {
  const std::int64_t span = state.range(0);
  for (auto _ : state) {
    WittElement acc;
    for (std::int64_t m = -span; m <= span; ++m) {
      for (std::int64_t n = -span; n <= span; ++n) {
        acc += bracket(WittElement::basis(m), WittElement::basis(n));
      }
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_BracketSweep)->Arg(5)->Arg(10);

void BM_AxiomSweep(benchmark::State& state) {
  const std::int64_t half = state.range(0);
  const CatalogEntry entry = catalog_lookup("NP5", -2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        check_postlie_def11(entry.spec, Window(-half, half), 1));
  }
}
BENCHMARK(BM_AxiomSweep)->Arg(4)->Arg(6)->Arg(8);

void BM_ClassifyGraded(benchmark::State& state) {
  const std::int64_t half = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_graded(Window(-half, half)));
  }
}
BENCHMARK(BM_ClassifyGraded)->Arg(3)->Arg(4);

void BM_ClassifyShifting(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        classify_shifting(GradedFamily::P5, -2, Window(-8, 8)));
  }
}
BENCHMARK(BM_ClassifyShifting);

void BM_Weight1Sweep(benchmark::State& state) {
  const RBCatalogEntry entry = rb_catalog_lookup("NR5", -2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_weight1(entry.op, Window(-10, 10)));
  }
}
BENCHMARK(BM_Weight1Sweep);

}  // namespace

BENCHMARK_MAIN();
