#include <benchmark/benchmark.h>

#include "adss/bridge.hpp"
#include "adss/charges.hpp"
#include "adss/geometry.hpp"
#include "adss/sampling.hpp"
#include "adss/symplectic.hpp"

using namespace adss;

static void BM_ExpAds(benchmark::State& state) {
  const AdsAlgebraElement v(0.3, 1.2, -0.4);
  for (auto _ : state) benchmark::DoNotOptimize(exp_algebra(v, 0.7));
}
BENCHMARK(BM_ExpAds);

static void BM_ExpSphere(benchmark::State& state) {
  const SphereAlgebraElement v(0.3, 1.2, -0.4);
  for (auto _ : state) benchmark::DoNotOptimize(exp_algebra(v, 0.7));
}
BENCHMARK(BM_ExpSphere);

static void BM_Bridge(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bridge(5.0 / 3.0, 1.25, 1));
}
BENCHMARK(BM_Bridge);

static void BM_ScanRegion(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scan_region({1.0, 3.0}, {1.0, 2.0}, {n, n}));
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_ScanRegion)->Arg(21)->Arg(101);

static void BM_Evaluate(benchmark::State& state) {
  const SolutionParams p = simple_family_solution({5.0 / 3.0, 1.25, 2});
  double tau = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate(p, tau, 1.3));
    tau += 1e-3;
  }
}
BENCHMARK(BM_Evaluate);

static void BM_EomResidual(benchmark::State& state) {
  const SolutionParams p = simple_family_solution({5.0 / 3.0, 1.25, 2});
  for (auto _ : state) benchmark::DoNotOptimize(eom_residual(p, 0.4, 1.3));
}
BENCHMARK(BM_EomResidual);

static void BM_ChargesNumeric(benchmark::State& state) {
  const SolutionParams p = simple_family_solution({5.0 / 3.0, 1.25, 1});
  const int nodes = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(charges_numeric(p, 0.0, nodes));
}
BENCHMARK(BM_ChargesNumeric)->Arg(64)->Arg(256)->Arg(1024);

static void BM_ParticleBrackets(benchmark::State& state) {
  PortableRng rng(7);
  const ParticleChartPoint p = random_particle_point(rng);
  const ChargeFunctions fns = particle_charge_functions(p);
  for (auto _ : state) benchmark::DoNotOptimize(charge_algebra(particle_symplectic(p), p.coordinates(), fns));
}
BENCHMARK(BM_ParticleBrackets)->Unit(benchmark::kMicrosecond);

static void BM_StringFormNested(benchmark::State& state) {
  PortableRng rng(7);
  const StringChartPoint p = random_string_point(rng);
  for (auto _ : state) benchmark::DoNotOptimize(string_symplectic(p));
}
BENCHMARK(BM_StringFormNested)->Unit(benchmark::kMillisecond);

static void BM_StringFormCartan(benchmark::State& state) {
  PortableRng rng(7);
  const StringChartPoint p = random_string_point(rng);
  for (auto _ : state) benchmark::DoNotOptimize(string_symplectic_cartan(p));
}
BENCHMARK(BM_StringFormCartan)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
