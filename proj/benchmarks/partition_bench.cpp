#include <benchmark/benchmark.h>

#include "spinchain/builtin.hpp"
#include "spinchain/chi_poly.hpp"
#include "spinchain/crystal.hpp"
#include "spinchain/global_recursion.hpp"
#include "spinchain/oracle.hpp"

namespace {

using namespace spinchain;

const InteractionProfile& random_profile() {
  static const InteractionProfile p = random_symmetric_profile(64, kBuiltinSeed);
  return p;
}

void BM_OracleGlobal(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_global(n, random_profile(), GlobalBoundary::plus));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_OracleGlobal)->DenseRange(2, 10, 2)->Unit(benchmark::kMillisecond);

void BM_RecurseGlobal(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(recurse_global(n, random_profile()));
  state.SetComplexityN(n);
}
BENCHMARK(BM_RecurseGlobal)->RangeMultiplier(2)->Range(2, 32)->Unit(benchmark::kMillisecond);

void BM_ClosedFormGlobal(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(closed_form_global(n, random_profile()));
}
BENCHMARK(BM_ClosedFormGlobal)->RangeMultiplier(2)->Range(2, 32)->Unit(benchmark::kMillisecond);

void BM_ClosedFormConstant(benchmark::State& state) {
  const auto one = InteractionProfile::constant(1);
  for (auto _ : state) benchmark::DoNotOptimize(closed_form_global(state.range(0), one));
}
BENCHMARK(BM_ClosedFormConstant)->RangeMultiplier(4)->Range(16, 256)->Unit(benchmark::kMillisecond);

void BM_NumericRecursion(benchmark::State& state) {
  const auto one = InteractionProfile::constant(1);
  const InverseTemperature beta(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(recurse_global_numeric(state.range(0), one, beta));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NumericRecursion)->RangeMultiplier(10)->Range(100, 100000)->Complexity(benchmark::oN);

void BM_CrystalTables(benchmark::State& state) {
  const Interval window(1, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_tables(window, random_profile()));
}
BENCHMARK(BM_CrystalTables)->DenseRange(4, 16, 4)->Unit(benchmark::kMillisecond);

void BM_CrystalOracle(benchmark::State& state) {
  const Interval window(1, state.range(0));
  for (auto _ : state) {
    for (std::size_t r = 0; r <= window.size(); ++r) {
      benchmark::DoNotOptimize(enumerate_crystal(window, random_profile(), BoundaryPair::plus(), r, Spin::down));
    }
  }
}
BENCHMARK(BM_CrystalOracle)->DenseRange(4, 16, 4)->Unit(benchmark::kMillisecond);

void BM_XClosed(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(x_closed(n, n / 2));
}
BENCHMARK(BM_XClosed)->RangeMultiplier(4)->Range(16, 1024);

void BM_XRecursiveTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(x_recursive_table(state.range(0)));
}
BENCHMARK(BM_XRecursiveTable)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
