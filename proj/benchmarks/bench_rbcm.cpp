#include <benchmark/benchmark.h>

#include "rbcm/classify.hpp"

using namespace rbcm;

static void BM_FactorXnPlus1(benchmark::State& state) {
  const Int p = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(factor_xn_plus1(p, 3, 12));
}
BENCHMARK(BM_FactorXnPlus1)->Arg(2)->Arg(3)->Arg(5);

static void BM_HenselLift(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Modulus m3 = Modulus::of(3), big = Modulus::prime_power(3, k);
  const Poly q(m3, {2, 1, 1});
  const Poly target = Poly::binomial(big, 8, -1);
  for (auto _ : state) benchmark::DoNotOptimize(hensel_lift_factor(q, 3, k, target));
}
BENCHMARK(BM_HenselLift)->Arg(2)->Arg(4)->Arg(8);

static void BM_CanonicalForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Modulus m = Modulus::of(27);
  const Poly ctx = Poly::binomial(m, n, 1);
  const std::vector<Poly> gens = {Poly(m, {3, 6, 9, 1}), Poly(m, {9, 0, 3}), Poly(m, {1, 1}).scaled(9)};
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(gens, ctx));
}
BENCHMARK(BM_CanonicalForm)->Arg(4)->Arg(8)->Arg(16);

static void BM_IdealEnumeration(benchmark::State& state) {
  const Modulus m = Modulus::of(4);
  const Poly ctx = Poly::binomial(m, static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ideals_containing(ctx));
}
BENCHMARK(BM_IdealEnumeration)->Arg(2)->Arg(4)->Arg(6);

static void BM_Oracle(benchmark::State& state) {
  const AbelianType g = AbelianType::of_cyclic_factors({9, 9});
  OracleOptions opts;
  opts.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_rbcms(g, 12, opts));
}
BENCHMARK(BM_Oracle)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_ClassifyCoprime(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify_coprime(3, 2, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ClassifyCoprime)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_CrossCheck(benchmark::State& state) {
  const AbelianType g = AbelianType::of_cyclic_factors({9, 3});
  for (auto _ : state) benchmark::DoNotOptimize(cross_check(g, 6));
}
BENCHMARK(BM_CrossCheck)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
