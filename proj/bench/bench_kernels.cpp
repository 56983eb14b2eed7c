// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "ulamk/core.hpp"
#include "ulamk/random.hpp"
#include "ulamk/solvers.hpp"
#include "ulamk/suites.hpp"

namespace {

void BM_AgreementGraphSerial(benchmark::State& state) {
  const auto inst = ulamk::gen_random(static_cast<std::size_t>(state.range(0)), 3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(ulamk::agreement_graph_serial(inst));
  state.SetComplexityN(state.range(0));
}

void BM_AgreementGraphParallel(benchmark::State& state) {
  const auto inst = ulamk::gen_random(static_cast<std::size_t>(state.range(0)), 3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(ulamk::agreement_graph(inst));
  state.SetComplexityN(state.range(0));
}

// Same-order tuples keep many sets feasible, which is the expensive case.
ulamk::Instance near_identity(std::size_t n) {
  auto inst = ulamk::gen_random(n, 1, 11);
  std::vector<ulamk::Label> t(inst.source()[0].begin(), inst.source()[0].end());
  std::swap(t[0], t[n - 1]);
  return ulamk::Instance(inst.source(), ulamk::PermutationTuple({ulamk::Permutation(std::move(t))}));
}

void BM_BruteForceSerial(benchmark::State& state) {
  const auto inst = near_identity(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ulamk::brute_force_opt(inst));
}

void BM_BruteForceParallel(benchmark::State& state) {
  const auto inst = near_identity(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ulamk::brute_force_opt_parallel(inst));
}

void BM_OracleSuite(benchmark::State& state) {
  ulamk::SuiteOptions opt;
  opt.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(ulamk::run_suite("oracle", opt));
}

}  // namespace

BENCHMARK(BM_AgreementGraphSerial)->RangeMultiplier(4)->Range(64, 4096)->Complexity();
BENCHMARK(BM_AgreementGraphParallel)->RangeMultiplier(4)->Range(64, 4096)->Complexity();
BENCHMARK(BM_BruteForceSerial)->DenseRange(12, 18, 3);
BENCHMARK(BM_BruteForceParallel)->DenseRange(12, 18, 3);
BENCHMARK(BM_OracleSuite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
