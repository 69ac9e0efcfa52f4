// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "orlab/error.hpp"
#include "orlab/young.hpp"

namespace orlab {
namespace {

TEST(Complement, ClosedForms) {
  auto half_square = YoungFunction::p_power(2);
  EXPECT_DOUBLE_EQ(complementary(half_square, 3), 4.5);
  EXPECT_EQ(complementary(half_square, 0), 0.0);
  EXPECT_TRUE(std::isinf(complementary(YoungFunction::p_power(1), 2)));
  EXPECT_EQ(complementary(YoungFunction::p_power(1), 0.5), 0.0);
}

TEST(Complement, NumericMatchesClosedForm) {
  for (const auto& phi : {YoungFunction::p_power(2), YoungFunction::p_power(3), YoungFunction::exp_minus(),
                          YoungFunction::cosh_minus_one()}) {
    for (double y : {0.1, 0.7, 1.5, 4.0}) {
      const double a = complementary(phi, y);
      const double b = complementary(phi, y, ComplementMethod::numeric);
      EXPECT_NEAR(a, b, 1e-9 * std::max(1.0, a)) << phi.name() << " y=" << y;
    }
  }
}

TEST(Complement, XlogNumericOracle) {
  auto phi = YoungFunction::xlog();
  EXPECT_NEAR(complementary(phi, 1), 0.33036612476168054, 1e-10);
  EXPECT_NEAR(complementary(phi, 2), 1.869586019429696, 1e-10);
}

TEST(Delta2, PowerConstant) {
  auto r = delta2_constant(YoungFunction::p_power(3));
  EXPECT_TRUE(r.bounded);
  EXPECT_NEAR(r.constant, 8.0, 1e-9);
}

TEST(Delta2, CoshUnbounded) {
  auto phi = YoungFunction::cosh_minus_one();
  auto ratio = [&](double x) { return phi(2 * x) / phi(x); };
  EXPECT_GT(ratio(10) / ratio(5), 100);
  EXPECT_NEAR(ratio(10) / ratio(5), 146.446, 1e-3);
  EXPECT_FALSE(delta2_constant(phi).bounded);
}

TEST(Delta2, XlogBoundedByFour) {
  auto r = delta2_constant(YoungFunction::xlog());
  EXPECT_TRUE(r.bounded);
  EXPECT_LE(r.constant, 4.0);
  EXPECT_NEAR(r.constant, 3.999998, 1e-5);
}

TEST(YoungInequality, Margins) {
  auto phi = YoungFunction::p_power(2);
  EXPECT_NEAR(young_inequality_margin(phi, 1, 1), 0.0, 1e-15);
  EXPECT_NEAR(young_inequality_margin(phi, 3, 1), 2.0, 1e-15);
}

TEST(YoungInequality, NonNegativeOnRandomPairs) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0, 5);
  for (const auto& phi : {YoungFunction::p_power(1.5), YoungFunction::p_power(3), YoungFunction::exp_minus(),
                          YoungFunction::cosh_minus_one(), YoungFunction::xlog()}) {
    for (int i = 0; i < 200; ++i) {
      const double x = u(rng), y = u(rng);
      EXPECT_GE(young_inequality_margin(phi, x, y), -1e-9) << phi.name();
    }
  }
}

TEST(YoungCheck, CatalogIsYoung) {
  for (const auto& phi : {YoungFunction::p_power(1), YoungFunction::p_power(2), YoungFunction::exp_minus(),
                          YoungFunction::exp_minus_dual(), YoungFunction::cosh_minus_one(),
                          YoungFunction::cosh_dual(), YoungFunction::xlog()}) {
    auto c = check_young(phi);
    EXPECT_TRUE(c.zero_at_zero && c.even && c.convex && c.grows) << phi.name();
  }
}

TEST(YoungFunction, RejectsBadExponent) { EXPECT_THROW(YoungFunction::p_power(0.5), ValidationError); }

}  // namespace
}  // namespace orlab
