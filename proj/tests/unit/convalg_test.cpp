// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "orlab/convalg.hpp"
#include "orlab/error.hpp"

namespace orlab {
namespace {

std::vector<double> sorted_real(const std::vector<Complex>& v) {
  std::vector<double> out;
  for (auto z : v) out.push_back(z.real());
  std::sort(out.begin(), out.end());
  return out;
}

FinSuppFun symmetric_pair(const GroupChain& g, Element a) {
  return (FinSuppFun::delta(g, a) + FinSuppFun::delta(g, g.inv(a))) * Complex(0.5);
}

TEST(Convolve, PointMassesInCyclicGroup) {
  auto g = build_cyclic_sum({4}, 1, {.haar = HaarNormalization::counting});
  const Element a{1};
  auto d = convolve(FinSuppFun::delta(g, a), FinSuppFun::delta(g, a));
  EXPECT_EQ(d.size(), 1u);
  EXPECT_EQ(d(g.mul(a, a)), Complex(1));
  EXPECT_EQ(involution(FinSuppFun::delta(g, a))(g.inv(a)), Complex(1));
}

TEST(Convolve, AlgebraLawsOnNonAbelianGroup) {
  auto g = build_leptin_hulanicki(1);
  std::mt19937_64 rng(2);
  auto f = random_function(g, 1, rng), h = random_function(g, 1, rng), k = random_function(g, 1, rng);
  EXPECT_LT(max_abs_diff(convolve(convolve(f, h), k), convolve(f, convolve(h, k))), 1e-13);
  EXPECT_LT(max_abs_diff(involution(convolve(f, h)), convolve(involution(h), involution(f))), 1e-14);
  EXPECT_LT(max_abs_diff(convolve(FinSuppFun::unit(g), f), f), 1e-15);
  EXPECT_LE(l1_norm(convolve(f, h)), l1_norm(f) * l1_norm(h) * (1 + 1e-12));
  EXPECT_GT(max_abs_diff(convolve(f, h), convolve(h, f)), 1e-3);
}

TEST(Convolve, PowerMatchesRepeatedProduct) {
  auto g = build_cyclic_sum({2, 3}, 2);
  std::mt19937_64 rng(6);
  auto f = random_function(g, 2, rng);
  auto p = f;
  for (int i = 1; i < 5; ++i) p = convolve(p, f);
  EXPECT_LT(max_abs_diff(convolution_power(f, 5), p), 1e-12);
}

TEST(Spectrum, CirculantInCountingHaar) {
  auto g = build_cyclic_sum({4}, 1, {.haar = HaarNormalization::counting});
  auto f = symmetric_pair(g, Element{1});
  auto ev = sorted_real(spectrum_exact(f));
  const std::vector<double> expected{-1, 0, 0, 1};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(ev[i], expected[i], 1e-14);
  EXPECT_NEAR(spectral_radius(f), 1, 1e-14);
}

TEST(Spectrum, IndicatorIsProjection) {
  auto g = build_cyclic_sum({2, 2}, 2);
  auto rep = regular_rep(FinSuppFun::indicator(g, 1), 2);
  auto ev = hermitian_eigen(rep.matrix, false).values;
  std::vector<double> v(ev.data(), ev.data() + ev.size());
  std::sort(v.begin(), v.end());
  const std::vector<double> expected{0, 0, 1, 1};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(v[i], expected[i], 1e-14);
}

TEST(Spectrum, BlocksMatchDense) {
  std::mt19937_64 rng(12);
  for (const auto& g : {build_cyclic_sum({2, 3, 4}, 3), build_leptin_hulanicki(1), build_leptin_hulanicki(2)}) {
    auto f = random_self_adjoint(g, g.levels(), rng);
    auto a = sorted_real(spectrum_exact(f, SpectrumPath::blocks));
    auto b = sorted_real(spectrum_exact(f, SpectrumPath::dense));
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-11) << g.name();
  }
}

TEST(Spectrum, GeneralSolverOnNonSelfAdjoint) {
  auto g = build_cyclic_sum({4}, 1, {.haar = HaarNormalization::counting});
  auto ev = spectrum_general(FinSuppFun::delta(g, Element{1}));
  for (auto z : ev) EXPECT_NEAR(std::abs(z), 1, 1e-12);
}

TEST(Spectrum, PullbackInvertsRegularRep) {
  auto g = build_leptin_hulanicki(1);
  std::mt19937_64 rng(3);
  auto f = random_function(g, 1, rng);
  EXPECT_LT(max_abs_diff(pullback(g, regular_rep(f)), f), 1e-15);
}

TEST(Gelfand, CirculantRadius) {
  auto g = build_cyclic_sum({4}, 1, {.haar = HaarNormalization::counting});
  auto rep = gelfand_sequence(symmetric_pair(g, Element{1}), {NormSpec::l1()}, 12);
  EXPECT_NEAR(rep[0].exact_radius, 1, 1e-14);
  EXPECT_NEAR(rep[0].values.back(), 1, 1e-3);
}

TEST(Gelfand, UnitAndHomogeneity) {
  auto g = build_cyclic_sum({2, 2, 2, 2}, 4);
  auto rep = gelfand_sequence(FinSuppFun::unit(g), {NormSpec::l1()}, 10);
  for (std::size_t k = 0; k < rep[0].values.size(); ++k) EXPECT_NEAR(rep[0].values[k], 1, 1e-14);
  std::mt19937_64 rng(4);
  auto f = random_self_adjoint(g, 2, rng);
  auto a = gelfand_sequence(f, {NormSpec::l1()}, 12);
  auto b = gelfand_sequence(f * Complex(3), {NormSpec::l1()}, 12);
  EXPECT_NEAR(b[0].exact_radius, 3 * a[0].exact_radius, 1e-12);
  EXPECT_NEAR(b[0].values.back(), 3 * a[0].values.back(), 1e-10);
}

TEST(Gelfand, WeightedOrliczExampleOnCountingChain) {
  auto g = build_cyclic_sum({2, 2, 2, 2}, 4, {.haar = HaarNormalization::counting});
  const Element a = cyclic_sum_element(g, {0, 1, 0, 0});
  auto f = symmetric_pair(g, a);
  auto w = std::make_shared<const Weight>(sharpen_p(Weight::trivial(g), 1));
  auto rep = gelfand_sequence(f, {NormSpec::orlicz(YoungFunction::p_power(2), w)}, 12);
  EXPECT_NEAR(rep[0].exact_radius, 1, 1e-14);
  EXPECT_LT(std::abs(rep[0].values.back() - 1), 0.05);
}

TEST(USeries, IdempotentScales) {
  auto g = build_cyclic_sum({2, 2}, 2);
  auto h = FinSuppFun::indicator(g, 1);
  ASSERT_LT(max_abs_diff(convolve(h, h), h), 1e-15);
  for (double t : {0.5, 2.0}) {
    auto s = u_series(h * Complex(t), 1, 1e-14);
    EXPECT_LT(max_abs_diff(s.value, h * Complex(std::expm1(t))), 1e-13);
    EXPECT_LT(max_abs_diff(u_exact(h, t), h * Complex(std::expm1(t))), 1e-13);
  }
}

TEST(USeries, DoublingRecursion) {
  auto g = build_leptin_hulanicki(1);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    auto f = random_function(g, 1, rng);
    auto u1 = u_series(f, 1, 1e-15).value;
    auto u2 = u_series(f * Complex(2), 1, 1e-15).value;
    EXPECT_LT(l1_norm(u2 - (u1 * Complex(2) + convolve(u1, u1))), 1e-12 * (1 + l1_norm(u2)));
  }
}

TEST(USeries, MatchesMatrixExponential) {
  auto g = build_cyclic_sum({2, 2, 2, 2}, 4);
  std::mt19937_64 rng(3);
  auto f = random_self_adjoint(g, 3, rng);
  auto s = u_series(f, Complex(0, 5), 1e-10);
  EXPECT_LE(s.tail_bound, 1e-10);
  EXPECT_LT(l1_norm(s.value - u_exact(f, Complex(0, 5))), 1e-9);
}

TEST(Growth, BelowUnitaryBound) {
  auto g = build_cyclic_sum({2, 2, 2}, 3);
  std::mt19937_64 rng(8);
  auto f = random_self_adjoint(g, 3, rng);
  auto prof = growth_profile(f, 0.5, 30, NormSpec::l1());
  EXPECT_TRUE(prof.within_unitary_bound);
  EXPECT_DOUBLE_EQ(prof.unitary_bound, unitary_bound(f, NormSpec::l1()));
  EXPECT_EQ(prof.rows.size(), 31u);
}

TEST(Inequalities, SuiteOnSmallChain) {
  auto g = build_cyclic_sum({2, 2, 2}, 3);
  auto w = Weight::radial(g, {1, 2, 4});
  auto rep = inequality_suite(g, 3, YoungFunction::p_power(2), w, 200, 1);
  EXPECT_EQ(rep.samples, 200u);
  EXPECT_TRUE(rep.r3_ok);
  EXPECT_TRUE(rep.rL_ok);
  EXPECT_LE(rep.max_r3, 1 + 1e-9);
  EXPECT_LE(rep.max_rL, 1 + 1e-9);
}

TEST(Inequalities, RadialMajorant) {
  auto g = build_cyclic_sum({2, 2, 2, 2}, 4);
  auto w = Weight::radial(g, {1, 2, 3, 5});
  std::mt19937_64 rng(10);
  for (int i = 0; i < 10; ++i) {
    auto f = random_function(g, 3, rng);
    auto [lhs, rhs] = radial_majorant_check(f, w, 4);
    EXPECT_LE(lhs, rhs * (1 + 1e-9));
  }
}

TEST(Convalg, RejectsMismatchedChains) {
  auto a = build_cyclic_sum({2, 2}, 2), b = build_cyclic_sum({3, 3}, 2);
  EXPECT_THROW(convolve(FinSuppFun::unit(a), FinSuppFun::unit(b)), ChainMismatchError);
}

}  // namespace
}  // namespace orlab
