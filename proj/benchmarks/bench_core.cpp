#include <benchmark/benchmark.h>

#include "bohmlw/ensemble.hpp"

namespace {

using namespace bohmlw;

GaussTrajectory bench_trajectory() {
  PacketParams p;
  p.u = FourVector{{1.0, 0.1, 0.0, 0.0}};
  p.sigma_initial = {1, 1, 1, 1};
  p.mass = 1.0;
  p.hbar = 1.0;
  return GaussTrajectory{p, CFourVector(0.2, 0.5, -0.3, 0.1), CFourVector{}};
}

void BM_null_roots(benchmark::State& state) {
  const GaussTrajectory t = bench_trajectory();
  const FourVector x{{25.0, 7.0, -3.0, 11.0}};
  for (auto _ : state) benchmark::DoNotOptimize(null_roots(x, t));
}
BENCHMARK(BM_null_roots);

void BM_lw_faraday(benchmark::State& state) {
  const GaussTrajectory t = bench_trajectory();
  const FourVector x{{25.0, 7.0, -3.0, 11.0}};
  const NullRoot root = retarded_root(x, t);
  for (auto _ : state) benchmark::DoNotOptimize(lw_faraday(x, t, root, 1.0));
}
BENCHMARK(BM_lw_faraday);

void BM_psi(benchmark::State& state) {
  const GaussTrajectory t = bench_trajectory();
  const FourVector x{{0.5, 0.3, -0.2, 0.9}};
  for (auto _ : state) benchmark::DoNotOptimize(psi(t.params, x, 0.7));
}
BENCHMARK(BM_psi);

void BM_quantum_current(benchmark::State& state) {
  const PacketParams p = bench_trajectory().params;
  const FourVector x{{0.5, 0.3, -0.2, 0.9}};
  for (auto _ : state) benchmark::DoNotOptimize(quantum_current(x, p, 1.0));
}
BENCHMARK(BM_quantum_current);

void BM_ensemble_field(benchmark::State& state) {
  EnsembleSpec spec;
  spec.packet = bench_trajectory().params;
  spec.n = state.range(0);
  spec.seed = 3;
  const FourVector x{{30.0, 10.0, 4.0, 2.0}};
  for (auto _ : state) benchmark::DoNotOptimize(ensemble_field(x, spec, 1));
}
BENCHMARK(BM_ensemble_field)->Arg(16)->Arg(256);

}  // namespace
