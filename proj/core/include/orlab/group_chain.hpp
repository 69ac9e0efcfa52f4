// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <ranges>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace orlab {

using Rational = boost::multiprecision::cpp_rational;

/// Default cap on the number of elements of an enumerable level.
inline constexpr std::uint64_t kEnumerationCap = std::uint64_t{1} << 20;

/// Opaque handle of a group element.
///
/// Every catalog group uses a prefix encoding: the elements of K_i are
/// exactly the ids 0, 1, ..., |K_i| - 1, and id 0 is the identity. The id
/// therefore doubles as the enumeration index inside any level that
/// contains the element.
struct Element {
  std::uint64_t id = 0;

  friend constexpr auto operator<=>(const Element&, const Element&) = default;
};

/// An abelian subgroup A of one level, A isomorphic to a product of cyclic
/// groups, together with left coset representatives of A in that level.
/// Used to block-diagonalise the regular representation.
struct AbelianSubgroup {
  std::vector<std::uint32_t> factor_orders;
  std::vector<Element> elements;
  /// Row-major, elements.size() x factor_orders.size().
  std::vector<std::uint32_t> coordinates;
  std::vector<Element> coset_representatives;
};

/// Multiplication backend of a catalog group. Implementations are immutable.
class GroupModel {
 public:
  virtual ~GroupModel() = default;

  virtual std::string name() const = 0;
  /// Orders of the natural levels, strictly increasing.
  virtual std::vector<std::uint64_t> level_orders() const = 0;
  virtual std::uint64_t mul(std::uint64_t x, std::uint64_t y) const = 0;
  virtual std::uint64_t inv(std::uint64_t x) const = 0;
  virtual std::vector<Element> generators() const = 0;
  /// Abelian subgroup of the natural level with the given order, if the
  /// model knows one.
  virtual std::optional<AbelianSubgroup> abelian_subgroup(std::uint64_t level_order) const = 0;
};

enum class HaarNormalization { normalized, counting };

struct ChainOptions {
  HaarNormalization haar = HaarNormalization::normalized;
  /// Allow levels beyond the enumeration cap (multiplication only).
  bool lazy = false;
  std::uint64_t enumeration_cap = kEnumerationCap;
};

/// Ascending chain K_1 < K_2 < ... < K_L of finite groups sharing one element
/// encoding. Immutable; copies share the underlying model and tables.
class GroupChain {
 public:
  GroupChain(std::shared_ptr<const GroupModel> model, std::vector<std::uint64_t> orders,
             ChainOptions options);

  const std::string& name() const { return name_; }
  std::size_t levels() const { return orders_.size(); }
  /// |K_level|, level is 1-based.
  std::uint64_t order(std::size_t level) const;
  /// [K_{i+1} : K_i] for i = 1 .. levels() - 1.
  std::vector<std::uint64_t> indices() const;

  Element identity() const { return Element{0}; }
  Element mul(Element x, Element y) const;
  Element inv(Element x) const;
  Element pow(Element x, std::uint64_t n) const;
  /// Order of x in the group.
  std::uint64_t element_order(Element x) const;

  bool contains(Element x) const { return x.id < orders_.back(); }
  /// Smallest i with x in K_i.
  std::size_t level_of(Element x) const;

  bool enumerable(std::size_t level) const;
  bool lazy() const { return options_.lazy; }
  /// Elements of K_level in enumeration order; throws EnumerationError when
  /// the level is above the enumeration cap.
  auto elements(std::size_t level) const {
    require_enumerable(level);
    return std::views::iota(std::uint64_t{0}, order(level)) |
           std::views::transform([](std::uint64_t id) { return Element{id}; });
  }
  void require_enumerable(std::size_t level) const;

  HaarNormalization haar() const { return options_.haar; }
  /// Haar mass of a single point: 1/|K_1| (normalized) or 1 (counting).
  double point_mass() const;
  Rational exact_point_mass() const;
  /// mu(K_level).
  Rational measure(std::size_t level) const;

  /// Canonical generators, ordered by level.
  std::vector<Element> generators() const;
  std::optional<AbelianSubgroup> abelian_subgroup(std::size_t level) const;

  /// Same chain with only the given (1-based, increasing) levels kept.
  GroupChain select_levels(const std::vector<std::size_t>& levels) const;
  GroupChain with_haar(HaarNormalization haar) const;

  const GroupModel& model() const { return *model_; }
  const std::vector<std::uint64_t>& orders() const { return orders_; }

  friend bool operator==(const GroupChain& a, const GroupChain& b);

 private:
  struct Tables;

  std::shared_ptr<const GroupModel> model_;
  std::vector<std::uint64_t> orders_;
  ChainOptions options_;
  std::string name_;
  std::shared_ptr<const Tables> tables_;
};

/// Measure-only model of a locally elliptic group: the indices
/// [K_{i+1} : K_i] with mu(K_1) = 1.
class ShellModel {
 public:
  /// `bounded_tail` states whether the (infinite) index sequence this
  /// truncation stands for stays bounded beyond the listed entries.
  explicit ShellModel(std::vector<std::uint64_t> indices, bool bounded_tail = true);
  static ShellModel constant(std::uint64_t index, std::size_t levels);

  std::size_t levels() const { return indices_.size() + 1; }
  const std::vector<std::uint64_t>& indices() const { return indices_; }
  Rational measure(std::size_t level) const;
  bool bounded_index() const { return bounded_tail_; }
  /// sup of the listed indices (the M of the bounded index property).
  std::uint64_t max_index() const;

 private:
  std::vector<std::uint64_t> indices_;
  bool bounded_tail_;
};

/// K_i = C_{orders[0]} x ... x C_{orders[i-1]}, i = 1 .. depth. Factors of
/// order 1 after the first add no level.
GroupChain build_cyclic_sum(const std::vector<std::uint64_t>& orders, std::size_t depth,
                            ChainOptions options = {});

/// Element of a cyclic-sum chain from its coordinates (one per factor).
Element cyclic_sum_element(const GroupChain& chain, const std::vector<std::uint64_t>& digits);
/// Coordinates of an element of a cyclic-sum chain.
std::vector<std::uint64_t> cyclic_sum_digits(const GroupChain& chain, Element x);
/// Factor orders of a cyclic-sum chain; empty for other catalogs.
std::vector<std::uint64_t> cyclic_sum_orders(const GroupChain& chain);

/// K_i = (maps H_i -> H_i under pointwise product) x| H_i, H_i = C_2^i acting
/// by translation of the argument. depth 1 or 2 enumerates; depth 3 needs
/// options.lazy.
GroupChain build_leptin_hulanicki(std::size_t depth, ChainOptions options = {});

/// Coarsest greedy sub-chain with non-decreasing indices.
GroupChain standardize(const GroupChain& chain);
/// Levels (1-based) kept by standardize().
std::vector<std::size_t> standard_levels(const std::vector<std::uint64_t>& indices);
bool is_standard(const std::vector<std::uint64_t>& indices);

/// (mu(K_1), mu(K_2 \ K_1), ..., mu(K_L \ K_{L-1})).
std::vector<Rational> shell_measures(const GroupChain& chain);
std::vector<Rational> shell_measures(const ShellModel& model);

}  // namespace orlab
