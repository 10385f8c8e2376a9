#include <benchmark/benchmark.h>

#include "strata/canonical.hpp"
#include "strata/complex.hpp"
#include "strata/enumerate.hpp"
#include "strata/moves.hpp"
#include "strata/number_theory.hpp"

namespace {

using strata::Signature;

void BM_EnumerateVertical(benchmark::State& state) {
  const auto sig = Signature::make(0, {1, 1, -1, -1, -1, -1});
  for (auto _ : state) benchmark::DoNotOptimize(strata::enumerate_vertical_divisors(sig));
}
BENCHMARK(BM_EnumerateVertical);

void BM_EnumerateVerticalGenus3(benchmark::State& state) {
  const auto sig = Signature::make(3, {4});
  for (auto _ : state) benchmark::DoNotOptimize(strata::enumerate_vertical_divisors(sig));
}
BENCHMARK(BM_EnumerateVerticalGenus3);

void BM_CanonicalForm(benchmark::State& state) {
  const auto sig = Signature::make(0, {1, 1, -1, -1, -1, -1});
  const auto divisors = strata::enumerate_vertical_divisors(sig).divisors;
  for (auto _ : state) {
    for (const auto& d : divisors) benchmark::DoNotOptimize(strata::canonical_form(d.graph));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(divisors.size()));
}
BENCHMARK(BM_CanonicalForm);

void BM_CuspOracle(benchmark::State& state) {
  const auto level = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(strata::cusp_count_oracle(strata::CuspQuery{level}));
}
BENCHMARK(BM_CuspOracle)->Arg(12)->Arg(60)->Arg(240);

void BM_CertifiedComplex(benchmark::State& state) {
  const auto sig = Signature::make(2, {1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(strata::build_boundary_complex(sig));
}
BENCHMARK(BM_CertifiedComplex)->Unit(benchmark::kMillisecond);

void BM_OracleComplex(benchmark::State& state) {
  const auto sig = Signature::make(1, {2, -1, -1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(strata::build_boundary_complex(sig, {}, strata::ComplexMode::Oracle));
  }
}
BENCHMARK(BM_OracleComplex)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
