// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <random>
#include <set>

#include "orlab/error.hpp"
#include "orlab/group_chain.hpp"

namespace orlab {
namespace {

std::vector<std::uint64_t> level_orders(const GroupChain& g) {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 1; i <= g.levels(); ++i) out.push_back(g.order(i));
  return out;
}

TEST(CyclicSum, OrdersAndIndices) {
  auto g = build_cyclic_sum({2, 3}, 2);
  EXPECT_EQ(level_orders(g), (std::vector<std::uint64_t>{2, 6}));
  EXPECT_EQ(g.indices(), (std::vector<std::uint64_t>{3}));

  auto h = build_cyclic_sum({1, 2, 3, 4}, 4);
  EXPECT_EQ(h.order(h.levels()), 24u);
  EXPECT_EQ(h.indices(), (std::vector<std::uint64_t>{2, 3, 4}));

  EXPECT_EQ(build_cyclic_sum({2, 2, 2}, 3).indices(), (std::vector<std::uint64_t>{2, 2}));
}

TEST(CyclicSum, GroupLaws) {
  auto g = build_cyclic_sum({2, 3, 4}, 3);
  const auto n = g.order(3);
  for (std::uint64_t a = 0; a < n; ++a) {
    const Element x{a};
    EXPECT_EQ(g.mul(x, g.inv(x)), g.identity());
    EXPECT_EQ(g.mul(g.identity(), x), x);
    for (std::uint64_t b = 0; b < n; b += 5) {
      const Element y{b};
      EXPECT_EQ(g.mul(x, y), g.mul(y, x));
      for (std::uint64_t c = 0; c < n; c += 7) EXPECT_EQ(g.mul(g.mul(x, y), Element{c}), g.mul(x, g.mul(y, Element{c})));
    }
  }
}

TEST(CyclicSum, DigitsRoundTrip) {
  auto g = build_cyclic_sum({2, 3, 4}, 3);
  auto x = cyclic_sum_element(g, {1, 2, 3});
  EXPECT_EQ(cyclic_sum_digits(g, x), (std::vector<std::uint64_t>{1, 2, 3}));
  EXPECT_EQ(g.level_of(x), 3u);
  EXPECT_EQ(g.element_order(x), 12u);
  EXPECT_EQ(g.pow(x, 12), g.identity());
}

TEST(CyclicSum, PrefixEncoding) {
  auto g = build_cyclic_sum({2, 3, 4}, 3);
  for (std::size_t l = 1; l <= g.levels(); ++l)
    for (auto x : g.elements(l))
      for (auto y : g.elements(l)) EXPECT_LT(g.mul(x, y).id, g.order(l));
}

TEST(CyclicSum, LazyDepthTwenty) {
  std::vector<std::uint64_t> orders;
  for (std::uint64_t i = 1; i <= 20; ++i) orders.push_back(i);
  EXPECT_THROW(build_cyclic_sum(orders, 20), SizeError);
  auto g = build_cyclic_sum(orders, 20, {.lazy = true});
  EXPECT_FALSE(g.enumerable(19));
  EXPECT_TRUE(g.enumerable(8));
  std::vector<std::uint64_t> d(20, 0);
  d[19] = 7;
  auto x = cyclic_sum_element(g, d);
  EXPECT_EQ(g.element_order(x), 20u);
  EXPECT_THROW(g.require_enumerable(20), EnumerationError);
}

TEST(LeptinHulanicki, Orders) {
  auto g1 = build_leptin_hulanicki(1);
  EXPECT_EQ(g1.order(1), 8u);
  auto g2 = build_leptin_hulanicki(2);
  EXPECT_EQ(g2.order(2), 1024u);
  EXPECT_EQ(g2.indices(), (std::vector<std::uint64_t>{128}));
  EXPECT_THROW(build_leptin_hulanicki(3), SizeError);
  EXPECT_EQ(build_leptin_hulanicki(3, {.lazy = true}).order(3), std::uint64_t{1} << 27);
  EXPECT_THROW(build_leptin_hulanicki(4, {.lazy = true}), SizeError);
}

TEST(LeptinHulanicki, GroupLawsAndNonAbelian) {
  auto g = build_leptin_hulanicki(1);
  std::set<std::uint64_t> products;
  bool commutative = true;
  for (auto x : g.elements(1)) {
    EXPECT_EQ(g.mul(x, g.inv(x)), g.identity());
    EXPECT_EQ(g.mul(g.inv(x), x), g.identity());
    for (auto y : g.elements(1)) {
      if (!(g.mul(x, y) == g.mul(y, x))) commutative = false;
      for (auto z : g.elements(1)) EXPECT_EQ(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
    }
  }
  EXPECT_FALSE(commutative);
}

TEST(LeptinHulanicki, SampledAssociativityAtDepthTwo) {
  auto g = build_leptin_hulanicki(2);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::uint64_t> pick(0, 1023);
  for (int t = 0; t < 2000; ++t) {
    const Element x{pick(rng)}, y{pick(rng)}, z{pick(rng)};
    EXPECT_EQ(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
    EXPECT_EQ(g.mul(x, g.inv(x)), g.identity());
  }
}

TEST(Standardize, KeepsStandardChains) {
  auto g = build_cyclic_sum({2, 3, 4}, 3);
  EXPECT_TRUE(is_standard(g.indices()));
  EXPECT_EQ(standardize(g).indices(), (std::vector<std::uint64_t>{3, 4}));
}

TEST(Standardize, MergesDecreasingIndices) {
  auto g = build_cyclic_sum({2, 4, 2, 3}, 4);
  EXPECT_EQ(g.indices(), (std::vector<std::uint64_t>{4, 2, 3}));
  EXPECT_FALSE(is_standard(g.indices()));
  auto s = standardize(g);
  EXPECT_EQ(level_orders(s), (std::vector<std::uint64_t>{2, 8, 48}));
  EXPECT_EQ(s.indices(), (std::vector<std::uint64_t>{4, 6}));
  EXPECT_TRUE(is_standard(s.indices()));
}

TEST(ShellMeasures, NormalizedHaar) {
  auto m = shell_measures(build_cyclic_sum({2, 2, 2}, 3));
  EXPECT_EQ(m, (std::vector<Rational>{1, 1, 2}));
  EXPECT_EQ(shell_measures(ShellModel::constant(3, 4)), (std::vector<Rational>{1, 2, 6, 18}));
}

TEST(ShellMeasures, CountingHaar) {
  auto g = build_cyclic_sum({2, 2, 2}, 3, {.haar = HaarNormalization::counting});
  EXPECT_EQ(shell_measures(g), (std::vector<Rational>{2, 2, 4}));
  EXPECT_DOUBLE_EQ(g.point_mass(), 1.0);
  EXPECT_DOUBLE_EQ(g.with_haar(HaarNormalization::normalized).point_mass(), 0.5);
}

TEST(GroupChain, RejectsBadInput) {
  EXPECT_THROW(build_cyclic_sum({}, 1), ValidationError);
  EXPECT_THROW(build_cyclic_sum({2, 2}, 3), ValidationError);
  EXPECT_THROW(build_leptin_hulanicki(0), ValidationError);
}

TEST(GroupChain, AbelianSubgroupCoversLevel) {
  for (const auto& g : {build_cyclic_sum({2, 3, 4}, 3), build_leptin_hulanicki(2)}) {
    auto a = g.abelian_subgroup(g.levels());
    ASSERT_TRUE(a.has_value());
    EXPECT_EQ(a->elements.size() * a->coset_representatives.size(), g.order(g.levels()));
  }
}

}  // namespace
}  // namespace orlab
