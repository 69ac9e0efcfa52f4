// SPDX-License-Identifier: Apache-2.0
#include <random>

#include <benchmark/benchmark.h>

#include "orlab/convalg.hpp"

using namespace orlab;

static void BM_SpectrumBlocks(benchmark::State& state) {
  const auto chain = build_leptin_hulanicki(2);
  std::mt19937_64 rng(4);
  const auto f = random_self_adjoint(chain, 2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(spectrum_exact(f, SpectrumPath::blocks));
}
BENCHMARK(BM_SpectrumBlocks)->Unit(benchmark::kMillisecond);

static void BM_SpectrumDense(benchmark::State& state) {
  const auto chain = build_cyclic_sum({2, 2, 2, 2, 2, 2, 2, 2}, 8);
  std::mt19937_64 rng(5);
  const auto f = random_self_adjoint(chain, static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(spectrum_exact(f, SpectrumPath::dense));
}
BENCHMARK(BM_SpectrumDense)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_Gelfand(benchmark::State& state) {
  const auto chain = build_cyclic_sum({2, 2, 2, 2}, 4);
  std::mt19937_64 rng(6);
  const auto f = random_self_adjoint(chain, 2, rng);
  const std::vector<NormSpec> norms{NormSpec::orlicz(YoungFunction::p_power(2))};
  for (auto _ : state) benchmark::DoNotOptimize(gelfand_sequence(f, norms, 12));
}
BENCHMARK(BM_Gelfand)->Unit(benchmark::kMillisecond);
