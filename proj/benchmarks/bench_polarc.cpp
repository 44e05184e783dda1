#include <benchmark/benchmark.h>

#include "polarc/chebyshev.hpp"
#include "polarc/counterexamples.hpp"
#include "polarc/product_poly.hpp"
#include "polarc/signs.hpp"
#include "polarc/sphere_norm.hpp"

namespace {

using namespace polarc;

void BM_ExhaustiveSigns(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto sys = random_system(Field::real, 6, m, 1);
  for (auto _ : state) benchmark::DoNotOptimize(maximize_signs_exhaustive(sys).length);
}
BENCHMARK(BM_ExhaustiveSigns)->DenseRange(12, 22, 2)->Unit(benchmark::kMillisecond);

void BM_FlipAscent(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto sys = random_system(Field::real, 8, m, 2);
  for (auto _ : state) benchmark::DoNotOptimize(maximize_signs_flip_ascent(sys, std::nullopt, 3));
}
BENCHMARK(BM_FlipAscent)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

void BM_PhaseAscent(benchmark::State& state) {
  const auto sys = random_system(Field::complex, 6, 6, 11);
  for (auto _ : state) benchmark::DoNotOptimize(maximize_phases(sys, 0).length);
}
BENCHMARK(BM_PhaseAscent)->Unit(benchmark::kMicrosecond);

void BM_PrValueFamily(benchmark::State& state) {
  const auto sys = family_system(6, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pr_value(sys).log_value);
}
BENCHMARK(BM_PrValueFamily)->Arg(20)->Arg(34)->Unit(benchmark::kMillisecond);

void BM_NormReal(benchmark::State& state) {
  const ProductPolynomial p(random_system(Field::real, static_cast<std::size_t>(state.range(0)),
                                          static_cast<std::size_t>(state.range(0)), 4));
  OptimizerOptions opts;
  opts.starts = 16;
  for (auto _ : state) benchmark::DoNotOptimize(norm_real(p, opts).value);
}
BENCHMARK(BM_NormReal)->Arg(3)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_NormComplex(benchmark::State& state) {
  const ProductPolynomial p(embed_in_dimension(rn_factorization(4), 4));
  OptimizerOptions opts;
  opts.starts = 16;
  for (auto _ : state) benchmark::DoNotOptimize(norm_complex(p, opts).value);
}
BENCHMARK(BM_NormComplex)->Unit(benchmark::kMillisecond);

void BM_GridOracle(benchmark::State& state) {
  const ProductPolynomial p(random_system(Field::real, 3, 3, 4));
  for (auto _ : state) benchmark::DoNotOptimize(grid_oracle(p, 300).value);
}
BENCHMARK(BM_GridOracle)->Unit(benchmark::kMillisecond);

void BM_Factorization(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rn_factorization(n).K);
}
BENCHMARK(BM_Factorization)->Arg(8)->Arg(32)->Unit(benchmark::kMicrosecond);

void BM_Deflation(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(deflation_factorization(n).K);
}
BENCHMARK(BM_Deflation)->Arg(8)->Arg(32)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
