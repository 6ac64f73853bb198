#include <benchmark/benchmark.h>

#include <random>

#include "lpq/evolve.hpp"
#include "lpq/interpolate.hpp"
#include "lpq/lorentz.hpp"
#include "lpq/operators.hpp"
#include "lpq/rearrange.hpp"

using namespace lpq;

namespace {

SampledFunction random_cells(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> v(n), m(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = unif(rng);
    m[i] = 0.01 + unif(rng);
  }
  return SampledFunction(std::move(v), std::move(m));
}

void bm_decreasing_rearrangement(benchmark::State& state) {
  auto f = random_cells(static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) {
    auto prof = decreasing_rearrangement(f);
    benchmark::DoNotOptimize(prof);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_decreasing_rearrangement)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Complexity();

void bm_lorentz_norm(benchmark::State& state) {
  auto f = random_cells(static_cast<std::size_t>(state.range(0)), 7);
  LorentzIndex idx(2.0, Exponent(2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lorentz_norm(f, idx));
  }
}
BENCHMARK(bm_lorentz_norm)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);

void bm_weak_norm(benchmark::State& state) {
  auto f = random_cells(static_cast<std::size_t>(state.range(0)), 9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(weak_norm(f, 2.0));
  }
}
BENCHMARK(bm_weak_norm)->RangeMultiplier(4)->Range(1 << 10, 1 << 18);

void bm_k_optimized(benchmark::State& state) {
  auto f = random_cells(static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(k_optimized(f, 0.37 * f.total_measure()));
  }
}
BENCHMARK(bm_k_optimized)->RangeMultiplier(4)->Range(1 << 6, 1 << 12);

void bm_heat_propagate(benchmark::State& state) {
  GridSpec g(1, 16.0, static_cast<int>(state.range(0)));
  auto f = make_bump_field(g, 0.0, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(heat_propagate(f, 0.5));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_heat_propagate)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Complexity();

void bm_schrodinger_propagate_2d(benchmark::State& state) {
  GridSpec g(2, 8.0, static_cast<int>(state.range(0)));
  auto f = make_gaussian_field(g, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(schrodinger_propagate(f, 0.5));
  }
}
BENCHMARK(bm_schrodinger_propagate_2d)->RangeMultiplier(2)->Range(32, 256);

void bm_hardy_ratio_sweep(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(hardy_ratio_sweep(2.0, {0.01}, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(bm_hardy_ratio_sweep)->DenseRange(1, 3);

}  // namespace

BENCHMARK_MAIN();
