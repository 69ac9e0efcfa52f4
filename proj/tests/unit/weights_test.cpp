// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>

#include "orlab/error.hpp"
#include "orlab/weights.hpp"

namespace orlab {
namespace {

GroupChain counterexample_chain(std::size_t depth, bool lazy) {
  std::vector<std::uint64_t> orders;
  for (std::uint64_t i = 1; i <= depth; ++i) orders.push_back(i);
  return build_cyclic_sum(orders, depth, {.lazy = lazy});
}

TEST(Radial, ShellValuesAndExhaustiveAxioms) {
  auto g = build_cyclic_sum({2, 2, 2}, 3);
  auto w = Weight::radial(g, {1, 2, 4});
  EXPECT_EQ(w(Element{0}), 1);
  EXPECT_EQ(w(Element{2}), 2);
  EXPECT_EQ(w(Element{3}), 2);
  EXPECT_EQ(w(Element{7}), 4);
  auto rep = check_axioms(w, 3);
  EXPECT_TRUE(rep.exhaustive);
  EXPECT_EQ(rep.pairs, 64u);
  EXPECT_TRUE(rep.submultiplicative);
  EXPECT_TRUE(rep.symmetric);
}

TEST(Radial, RejectsDecreasingValues) {
  auto g = build_cyclic_sum({2, 2, 2}, 3);
  EXPECT_THROW(Weight::radial(g, {1, 4, 2}), ValidationError);
  EXPECT_THROW(Weight::radial(g, {0.5, 1, 2}), ValidationError);
  EXPECT_THROW(Weight::radial(g, {1, 2}), ValidationError);
}

TEST(Axioms, TrivialWeightConstant) {
  auto g = build_cyclic_sum({2, 2, 2}, 3);
  auto rep = check_axioms(Weight::trivial(g), 3);
  EXPECT_DOUBLE_EQ(rep.subadditive_constant, 0.5);
  EXPECT_DOUBLE_EQ(rep.max_form_constant, 1.0);
}

TEST(Sharpen, CounterexampleSecondLevel) {
  auto w = nonsubadditive_example(counterexample_chain(6, false));
  auto s = sharpen(w);
  EXPECT_DOUBLE_EQ(s.shell_values()[1], 2.0);
}

TEST(Sharpen, DominatesAndBoundedByVariation) {
  auto g = counterexample_chain(6, false);
  auto w = nonsubadditive_example(g);
  auto s = sharpen(w);
  auto sp = sharpen_p(w, 2);
  const double var = variation(w, g.levels());
  for (auto x : g.elements(g.levels())) {
    EXPECT_LE(w(x), s(x));
    EXPECT_LE(s(x), sp(x));
    EXPECT_LE(s(x), (var + 1) * w(x));
  }
}

TEST(Sharpen, PowerSharpenOfTrivial) {
  auto g = build_cyclic_sum({2, 2, 2}, 3);
  auto sp = sharpen_p(Weight::trivial(g), 1);
  EXPECT_EQ(sp.shell_values(), (std::vector<double>{2, 5, 20}));
  auto lq = lq_membership(sp, 1, 3);
  EXPECT_NEAR(lq.partial_sums.back(), 0.8, 1e-15);
}

TEST(Sharpen, PowerSharpenCertificate) {
  auto g = build_cyclic_sum({2, 3, 2, 4, 2}, 5);
  auto w = Weight::radial(g, {1, 2, 2, 3, 5});
  for (double p : {1.0, 1.5, 2.0, 3.0}) {
    const double q = conjugate_exponent(p);
    auto sp = sharpen_p(w, p);
    auto lq = lq_membership(sp, q, g.levels());
    EXPECT_EQ(lq.verdict, LqVerdict::convergent);
    EXPECT_FALSE(lq.heuristic);
    for (std::size_t L = 1; L <= g.levels(); ++L) {
      double bound = 1 / std::pow(2.0, q);
      for (std::size_t i = 1; i <= L; ++i) bound += std::pow(static_cast<double>(i), -2 * q);
      EXPECT_LE(lq.partial_sums[L - 1], bound + 1e-12) << "p=" << p << " L=" << L;
    }
  }
}

TEST(Variation, RadialExample) {
  auto g = build_cyclic_sum({2, 2, 2}, 3);
  EXPECT_DOUBLE_EQ(variation(Weight::radial(g, {1, 2, 4}), 3), 3.0);
}

TEST(Grs, CounterexampleGenerator) {
  auto g = counterexample_chain(6, false);
  auto w = nonsubadditive_example(g);
  std::vector<std::uint64_t> d(6, 0);
  d[3] = 1;
  const Element x4 = cyclic_sum_element(g, d);
  auto s = grs_sequence(w, x4, 1000);
  EXPECT_DOUBLE_EQ(s.cyclic_sup, 64);
  EXPECT_TRUE(s.contained);
  d[3] = 2;
  EXPECT_DOUBLE_EQ(w(cyclic_sum_element(g, d)), 16);
}

TEST(Lq, GeometricShells) {
  ShellModel m = ShellModel::constant(2, 30);
  std::vector<double> a;
  for (std::size_t i = 1; i <= 30; ++i) a.push_back(std::pow(2.0, static_cast<double>(i)));
  auto lq = lq_membership(Weight::radial(m, a), 2, 30);
  EXPECT_NEAR(lq.partial_sums.back(), 0.375, 1e-9);
  ASSERT_TRUE(lq.limit.has_value());
  EXPECT_NEAR(*lq.limit, 0.375, 1e-9);
  EXPECT_EQ(lq.verdict, LqVerdict::convergent);
}

TEST(Wfq, GeometricSequence) {
  ShellModel m = ShellModel::constant(2, 12);
  SummableSequence f{.kind = SummableSequence::Kind::geometric, .c = 1, .r = 0.5};
  auto w = wfq_weight(m, f, 1);
  for (std::size_t n = 1; n < 12; ++n) {
    const double expected = std::pow(4.0, static_cast<double>(n));
    EXPECT_NEAR(w.shell_values()[n], expected, 1e-13 * expected);
  }
  auto lq = lq_membership(w, 1, 12);
  for (double s : lq.partial_sums) EXPECT_LT(s, 2);
}

TEST(Wfq, PowerSequence) {
  ShellModel m = ShellModel::constant(3, 10);
  SummableSequence f{.kind = SummableSequence::Kind::power, .c = 1, .s = 2};
  auto w = wfq_weight(m, f, 2);
  for (std::size_t n = 1; n < 10; ++n) {
    const double nn = static_cast<double>(n);
    EXPECT_NEAR(w.shell_values()[n], std::sqrt(std::pow(3.0, nn) * nn * nn), 1e-9 * w.shell_values()[n]);
  }
  auto lq = lq_membership(w, 2, 10);
  for (std::size_t L = 1; L <= 10; ++L) EXPECT_LT(lq.partial_sums[L - 1], 1 + f.partial_sum(L - 1) + 1e-12);
}

TEST(Wfq, RejectsNonSummable) {
  ShellModel m = ShellModel::constant(2, 5);
  EXPECT_THROW(wfq_weight(m, {.kind = SummableSequence::Kind::geometric, .c = 1, .r = 1}, 1), ValidationError);
  EXPECT_THROW(wfq_weight(m, {.kind = SummableSequence::Kind::power, .c = 1, .s = 0}, 1), ValidationError);
}

TEST(Counterexample, WitnessMatchesClosedForm) {
  auto w = nonsubadditive_example(counterexample_chain(20, true));
  auto rows = nonsubadditive_witness(w);
  ASSERT_EQ(rows.size(), 5u);
  const double expected[] = {1.7777777777777777, 15.937743190661479, 215.9843761301989, 4095.9960937537253,
                             99999.99902343751};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_NEAR(rows[i].ratio, expected[i], 1e-12 * expected[i]);
    EXPECT_NEAR(rows[i].ratio, rows[i].closed_form, 1e-12 * expected[i]);
    if (i > 0) EXPECT_GT(rows[i].ratio, rows[i - 1].ratio);
  }
}

TEST(Counterexample, RequiresConsecutiveOrders) {
  EXPECT_THROW(nonsubadditive_example(build_cyclic_sum({2, 2, 2}, 3)), ValidationError);
}

TEST(UniformGrs, RootsDecreaseForRadialWeight) {
  auto g = build_cyclic_sum({2, 2, 2, 2}, 4);
  auto u = uniform_grs_weight(Weight::radial(g, {1, 2, 4, 8}));
  EXPECT_EQ(u(0), 1);
  EXPECT_EQ(u(3), 4);
  EXPECT_EQ(u(-3), 4);
  EXPECT_EQ(u.root_sequence().size(), 4u);
}

}  // namespace
}  // namespace orlab
