#include <benchmark/benchmark.h>

#include "qcorr/dqc1.hpp"
#include "qcorr/eigen.hpp"
#include "qcorr/measures.hpp"
#include "qcorr/random.hpp"
#include "qcorr/states.hpp"

using namespace qcorr;

static void BM_HermitianEigen(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto rho = randomDensityMatrix(d, 1, d, 42);
  for (auto _ : state) benchmark::DoNotOptimize(hermitianEigen(rho.matrix()));
}
BENCHMARK(BM_HermitianEigen)->Arg(4)->Arg(9)->Arg(16)->Arg(64);

static void BM_ProjectiveOptimizerTwoQubit(benchmark::State& state) {
  const auto rho = twoQubitState({{0.3, -0.5, 0.1}});
  OptimizerConfig cfg;
  cfg.restarts = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(maximizeMIProjective(rho, cfg).value);
}
BENCHMARK(BM_ProjectiveOptimizerTwoQubit)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_Dqc1Scan(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dqc1Scan(n, 20, PhaseModel::Uniform));
}
BENCHMARK(BM_Dqc1Scan)->Arg(4)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
