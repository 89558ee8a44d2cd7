// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS set to compare.
#include <benchmark/benchmark.h>

#include <vector>

#include "ladderops/kernels.hpp"

namespace {

using namespace ladderops;

std::vector<double> grid(int count) {
  std::vector<double> z(count);
  for (int i = 0; i < count; ++i) z[i] = -1.0 + 2.0 * i / (count - 1);
  return z;
}

void BM_EvalGridSerial(benchmark::State& state) {
  const RecurrenceTable table = make_recurrence_table({0.5, 1.5}, 200);
  const std::vector<double> z = grid(static_cast<int>(state.range(0)));
  std::vector<double> out(z.size());
  for (auto _ : state) {
    eval_grid_serial(table, 200, z, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_EvalGridOmp(benchmark::State& state) {
  const RecurrenceTable table = make_recurrence_table({0.5, 1.5}, 200);
  const std::vector<double> z = grid(static_cast<int>(state.range(0)));
  std::vector<double> out(z.size());
  for (auto _ : state) {
    eval_grid(table, 200, z, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ResidualSweepSerial(benchmark::State& state) {
  const auto samples = draw_residual_samples(7, static_cast<int>(state.range(0)), SampleBox{});
  for (auto _ : state) benchmark::DoNotOptimize(residual_sweep_serial(samples));
}

void BM_ResidualSweepOmp(benchmark::State& state) {
  const auto samples = draw_residual_samples(7, static_cast<int>(state.range(0)), SampleBox{});
  for (auto _ : state) benchmark::DoNotOptimize(residual_sweep(samples));
}

void BM_HypergeometricGapSerial(benchmark::State& state) {
  const std::vector<double> x = grid(101);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hypergeometric_gap_serial({-0.5, 2.0}, static_cast<int>(state.range(0)), x));
  }
}

void BM_HypergeometricGapOmp(benchmark::State& state) {
  const std::vector<double> x = grid(101);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hypergeometric_gap({-0.5, 2.0}, static_cast<int>(state.range(0)), x));
  }
}

void BM_GramSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const QuadratureRule rule = gauss_rule({1.0, 2.0}, n + 1);
  const RecurrenceTable table = make_recurrence_table({1.0, 2.0}, n);
  for (auto _ : state) benchmark::DoNotOptimize(gram_matrix_serial(rule, table, n));
}

void BM_GramOmp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const QuadratureRule rule = gauss_rule({1.0, 2.0}, n + 1);
  const RecurrenceTable table = make_recurrence_table({1.0, 2.0}, n);
  for (auto _ : state) benchmark::DoNotOptimize(gram_matrix(rule, table, n));
}

}  // namespace

BENCHMARK(BM_EvalGridSerial)->Arg(1 << 12)->Arg(1 << 16);
BENCHMARK(BM_EvalGridOmp)->Arg(1 << 12)->Arg(1 << 16);
BENCHMARK(BM_ResidualSweepSerial)->Arg(200)->Arg(2000);
BENCHMARK(BM_ResidualSweepOmp)->Arg(200)->Arg(2000);
BENCHMARK(BM_HypergeometricGapSerial)->Arg(10)->Arg(40);
BENCHMARK(BM_HypergeometricGapOmp)->Arg(10)->Arg(40);
BENCHMARK(BM_GramSerial)->Arg(50)->Arg(200);
BENCHMARK(BM_GramOmp)->Arg(50)->Arg(200);

BENCHMARK_MAIN();
