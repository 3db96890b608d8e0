#include <benchmark/benchmark.h>

#include <random>

#include "hbell/bell_polynomial.hpp"
#include "hbell/dft.hpp"
#include "hbell/polytope.hpp"
#include "hbell/symmetry.hpp"
#include "hbell/violation.hpp"

using namespace hbell;

static void BM_DftExact(benchmark::State& state) {
  const auto p = Params::make(3, static_cast<int>(state.range(0)));
  const auto f = DitFunction::from_code(p, 12345 % *p.function_count()).values();
  for (auto _ : state) benchmark::DoNotOptimize(dft(f, p));
}
BENCHMARK(BM_DftExact)->Arg(1)->Arg(2)->Arg(3);

static void BM_DftFast(benchmark::State& state) {
  const auto p = Params::make(3, static_cast<int>(state.range(0)));
  std::vector<CycNum> f(p.D(), CycNum::root(3, 1));
  for (auto _ : state) benchmark::DoNotOptimize(dft_fast(f, p));
}
BENCHMARK(BM_DftFast)->Arg(2)->Arg(4)->Arg(6);

static void BM_Classify32(benchmark::State& state) {
  const auto p = Params::make(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(classify_orbits(p));
}
BENCHMARK(BM_Classify32)->Unit(benchmark::kMillisecond);

static void BM_ViolationSweep31(benchmark::State& state) {
  const auto p = Params::make(3, 1);
  for (auto _ : state)
    for (const auto& f : enumerate_functions(p)) benchmark::DoNotOptimize(violation_bound(f, Convention::regauged));
}
BENCHMARK(BM_ViolationSweep31)->Unit(benchmark::kMicrosecond);

static void BM_ViolationBound32(benchmark::State& state) {
  const auto f = DitFunction::from_code(Params::make(3, 2), 777);
  for (auto _ : state) benchmark::DoNotOptimize(violation_bound(f));
}
BENCHMARK(BM_ViolationBound32)->Unit(benchmark::kMicrosecond);

static void BM_Membership(benchmark::State& state) {
  const auto p = Params::make(3, static_cast<int>(state.range(0)));
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  CorrelationVector xi(p.D());
  for (auto& x : xi) x = std::complex<double>(g(rng), g(rng)) * 0.2;
  for (auto _ : state) benchmark::DoNotOptimize(membership(xi, p));
}
BENCHMARK(BM_Membership)->Arg(1)->Arg(2)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
