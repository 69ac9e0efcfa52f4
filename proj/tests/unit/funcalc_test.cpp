// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>

#include "orlab/error.hpp"
#include "orlab/funcalc.hpp"

namespace orlab {
namespace {

const AGammaFunction& default_plateau() {
  static const AGammaFunction phi = AGammaFunction::plateau(1, 3, 0.5, 0.5);
  return phi;
}

TEST(Plateau, ValuesOnAndOffThePlateau) {
  const auto& phi = default_plateau();
  EXPECT_NEAR(phi(2).real(), 1, 1e-6);
  EXPECT_NEAR(std::abs(phi(0.5)), 0, 1e-6);
  EXPECT_NEAR(std::abs(phi(0)), 0, 1e-6);
  EXPECT_NEAR(phi(1.5).real(), 1, 1e-6);
}

TEST(Plateau, GridProfile) {
  auto prof = plateau_profile(default_plateau(), 1, 3, 0.5);
  EXPECT_TRUE(prof.ok);
  EXPECT_LE(prof.max_abs_outside, 1e-6);
  EXPECT_LE(prof.max_dev_inside, 1e-6);
}

TEST(Plateau, CoefficientsWithinEnvelopeAndSymmetric) {
  const auto& phi = default_plateau();
  for (std::int64_t n = 1; n <= phi.range(); n += 7) {
    EXPECT_LE(std::abs(phi.coefficient(n)), phi.envelope(n) * (1 + 1e-9)) << n;
    EXPECT_EQ(phi.coefficient(-n), std::conj(phi.coefficient(n)));
  }
  EXPECT_LT(phi.truncation_l1(), 1e-15);
}

TEST(Plateau, WeightedNormIsFinite) {
  const auto& phi = default_plateau();
  EXPECT_TRUE(std::isfinite(phi.weighted_norm()));
  EXPECT_LT(phi.weighted_remainder(), 1e-8 * phi.weighted_norm());
  auto blocks = phi.weighted_block_sums();
  double prefix = 0;
  for (double b : blocks) {
    EXPECT_GE(b, 0);
    prefix += b;
  }
  EXPECT_NEAR(prefix, phi.weighted_stored(), 1e-9 * phi.weighted_stored());
}

TEST(Plateau, RejectsBadParameters) {
  EXPECT_THROW(AGammaFunction::plateau(1, 3, 0.5, 0.3), ValidationError);
  EXPECT_THROW(AGammaFunction::plateau(1, 1.5, 0.5, 0.5), ValidationError);
  EXPECT_THROW(AGammaFunction::plateau(1, 7, 0.5, 0.5), ValidationError);
}

TEST(Calculus, SeriesMatchesSpectral) {
  auto g = build_cyclic_sum({2, 2, 2, 2}, 4);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 5; ++i) {
    auto f = random_self_adjoint(g, 2, rng);
    auto s = apply_series(default_plateau(), f, 1e-6);
    EXPECT_LT(s.tail_bound, 1e-6);
    EXPECT_LE(l1_norm(s.value - apply_spectral(default_plateau(), f)), 1e-6 + 1e-8);
  }
}

TEST(Calculus, RejectsNonSelfAdjoint) {
  auto g = build_cyclic_sum({4}, 1);
  EXPECT_THROW(apply_spectral(default_plateau(), FinSuppFun::delta(g, Element{1})), ValidationError);
}

TEST(Calculus, HomomorphismIdentity) {
  auto g = build_leptin_hulanicki(1);
  auto psi = AGammaFunction::plateau(0.5, 2.5, 0.4, 0.5);
  auto prod = pointwise_product(default_plateau(), psi);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 5; ++i) {
    auto f = random_self_adjoint(g, 1, rng) * Complex(3);
    auto lhs = apply_spectral(prod, f);
    auto rhs = convolve(apply_spectral(default_plateau(), f), apply_spectral(psi, f));
    EXPECT_LE(l1_norm(lhs - rhs), 1e-6);
  }
}

TEST(Calculus, PlateauPartitionIdentity) {
  auto g = build_cyclic_sum({2, 3, 2}, 3);
  auto psi = AGammaFunction::plateau(0.4, 3.6, 0.2, 0.5);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 5; ++i) {
    auto f = random_self_adjoint(g, 3, rng) * Complex(4);
    auto phif = apply_spectral(default_plateau(), f);
    EXPECT_LE(l1_norm(convolve(apply_spectral(psi, f), phif) - phif), 1e-8);
  }
}

TEST(Calculus, ApproximateIdentity) {
  auto g = build_cyclic_sum({2, 2, 2, 2}, 4);
  auto phi = AGammaFunction::plateau(0.5, 3, 0.25, 0.5);
  std::mt19937_64 rng(4);
  auto h = random_function(g, 4, rng);
  auto t = approx_identity_convergence(phi, NormSpec::l1(), h);
  EXPECT_EQ(t.rows.size(), 5u);
  EXPECT_TRUE(t.exact_at_unit);
  EXPECT_TRUE(t.monotone);
  EXPECT_THROW(approx_identity_convergence(default_plateau(), NormSpec::l1(), h), ValidationError);
}

TEST(Calculus, ZeroFunction) {
  auto g = build_cyclic_sum({2, 2}, 2);
  std::mt19937_64 rng(5);
  auto f = random_self_adjoint(g, 2, rng);
  EXPECT_TRUE(apply_spectral(AGammaFunction::zero(0.5), f).empty() ||
              l1_norm(apply_spectral(AGammaFunction::zero(0.5), f)) < 1e-15);
}

}  // namespace
}  // namespace orlab
