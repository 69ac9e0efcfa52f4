// SPDX-License-Identifier: Apache-2.0
#include <random>

#include <benchmark/benchmark.h>

#include "orlab/convalg.hpp"
#include "orlab/orlicz_norms.hpp"

using namespace orlab;

namespace {

FinSuppFun sample(std::size_t level) {
  static const auto chain = build_cyclic_sum({2, 2, 2, 2, 2, 2, 2, 2, 2, 2}, 10);
  std::mt19937_64 rng(level);
  return random_function(chain, level, rng);
}

}  // namespace

static void BM_Luxemburg(benchmark::State& state) {
  const auto f = sample(static_cast<std::size_t>(state.range(0)));
  const auto phi = YoungFunction::xlog();
  for (auto _ : state) benchmark::DoNotOptimize(luxemburg_norm(f, phi));
}
BENCHMARK(BM_Luxemburg)->DenseRange(4, 10, 3);

static void BM_Orlicz(benchmark::State& state) {
  const auto f = sample(static_cast<std::size_t>(state.range(0)));
  const auto phi = YoungFunction::p_power(3);
  for (auto _ : state) benchmark::DoNotOptimize(orlicz_norm(f, phi));
}
BENCHMARK(BM_Orlicz)->DenseRange(4, 10, 3);
