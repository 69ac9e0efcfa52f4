// SPDX-License-Identifier: Apache-2.0
#include <random>

#include <benchmark/benchmark.h>

#include "orlab/convalg.hpp"

using namespace orlab;

static void BM_ConvolveCyclic(benchmark::State& state) {
  const auto chain = build_cyclic_sum({2, 2, 2, 2, 2, 2, 2, 2}, 8);
  const auto level = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  const auto f = random_function(chain, level, rng);
  const auto g = random_function(chain, level, rng);
  for (auto _ : state) benchmark::DoNotOptimize(convolve(f, g));
  state.SetComplexityN(static_cast<std::int64_t>(chain.order(level)));
}
BENCHMARK(BM_ConvolveCyclic)->DenseRange(2, 8, 2)->Complexity();

static void BM_ConvolveLeptinHulanicki(benchmark::State& state) {
  const auto chain = build_leptin_hulanicki(2);
  std::mt19937_64 rng(2);
  const auto f = random_function(chain, static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(convolve(f, f));
}
BENCHMARK(BM_ConvolveLeptinHulanicki)->Arg(1)->Arg(2);

static void BM_ConvolutionPower(benchmark::State& state) {
  const auto chain = build_cyclic_sum({2, 2, 2, 2}, 4);
  std::mt19937_64 rng(3);
  const auto f = random_self_adjoint(chain, 4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(convolution_power(f, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_ConvolutionPower)->RangeMultiplier(16)->Range(16, 4096);
