// SPDX-License-Identifier: Apache-2.0
#include <random>

#include <benchmark/benchmark.h>

#include "orlab/funcalc.hpp"

using namespace orlab;

static void BM_PlateauConstruction(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(AGammaFunction::plateau(1, 3, 0.5, 0.5));
}
BENCHMARK(BM_PlateauConstruction)->Unit(benchmark::kMillisecond);

static void BM_ApplySpectral(benchmark::State& state) {
  const auto phi = AGammaFunction::plateau(1, 3, 0.5, 0.5);
  const auto chain = build_cyclic_sum({2, 2, 2, 2}, 4);
  std::mt19937_64 rng(7);
  const auto f = random_self_adjoint(chain, 4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(apply_spectral(phi, f));
}
BENCHMARK(BM_ApplySpectral)->Unit(benchmark::kMillisecond);

static void BM_ApplySeries(benchmark::State& state) {
  const auto phi = AGammaFunction::plateau(1, 3, 0.5, 0.5);
  const auto chain = build_cyclic_sum({2, 2, 2, 2}, 4);
  std::mt19937_64 rng(8);
  const auto f = random_self_adjoint(chain, 4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(apply_series(phi, f, 1e-6));
}
BENCHMARK(BM_ApplySeries)->Unit(benchmark::kMillisecond);
