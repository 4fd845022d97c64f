// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "elliptica/distortion.hpp"
#include "elliptica/extremals.hpp"
#include "elliptica/oracles.hpp"
#include "elliptica/pair_scan.hpp"

using namespace elliptica;

namespace {

Execution exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

std::vector<kernels::Cell> polar_cells(int n_r, int n_theta) {
  const auto f = build_Fn(2, 2.0, 200);
  std::vector<kernels::Cell> cells;
  const double r = 0.4;
  const double delta = std::max(r / n_r, 2 * std::numbers::pi * r / n_theta);
  for (int i = 0; i < n_r; ++i) {
    for (int j = 0; j < n_theta; ++j) {
      const Complex z = std::polar(r * (i + 0.5) / n_r, 2 * std::numbers::pi * (j + 0.5) / n_theta);
      const auto p = profile(f, z);
      cells.push_back({z, delta, eval(f, z), 0.5 * p.lambda_min, p.lambda_max + 0.1});
    }
  }
  return cells;
}

void BM_PairScan(benchmark::State& state) {
  const auto cells = polar_cells(static_cast<int>(state.range(1)), 4 * static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::pair_scan(exec_of(state), cells, 1 << 16));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(cells.size()));
}

void BM_EllipticityArgmin(benchmark::State& state) {
  const auto f = build_Fn(3, 2.0, 400);
  const SamplingSpec grid(static_cast<int>(state.range(1)), 4 * static_cast<int>(state.range(1)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ellipticity_check(f, EllipticityParams(1, 0), 0.999, grid, exec_of(state)));
  }
}

void BM_Univalence(benchmark::State& state) {
  const auto f = build_Fn(2, 2.0, 200);
  for (auto _ : state) {
    benchmark::DoNotOptimize(univalence_probe(f, 0.3999996, SamplingSpec::oracle_default(), exec_of(state)));
  }
}

void BM_CoverageNet(benchmark::State& state) {
  const auto f = build_Fn(2, 2.0, 200);
  for (auto _ : state) {
    benchmark::DoNotOptimize(coverage_probe(f, 0.4, 0.5, SamplingSpec::oracle_default(), exec_of(state)));
  }
}

}  // namespace

BENCHMARK(BM_PairScan)->ArgsProduct({{0, 1}, {24, 48}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EllipticityArgmin)->ArgsProduct({{0, 1}, {64, 256}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Univalence)->Args({0})->Args({1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoverageNet)->Args({0})->Args({1})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
