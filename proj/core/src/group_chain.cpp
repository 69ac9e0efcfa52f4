// SPDX-License-Identifier: Apache-2.0
#include "orlab/group_chain.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "orlab/error.hpp"

namespace orlab {

namespace {

constexpr std::uint64_t kTableOrderLimit = 2048;

std::string join(const std::vector<std::uint64_t>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return os.str();
}

// Mixed radix, first factor least significant.
class CyclicSumModel final : public GroupModel {
 public:
  explicit CyclicSumModel(std::vector<std::uint64_t> orders) : orders_(std::move(orders)) {
    std::uint64_t w = 1;
    for (auto n : orders_) {
      weights_.push_back(w);
      if (n > 1 && w > std::numeric_limits<std::uint64_t>::max() / n)
        throw SizeError("cyclic sum: group order exceeds the 64-bit element encoding");
      w *= n;
    }
  }

  std::string name() const override { return "cyclic_sum(" + join(orders_) + ")"; }

  std::vector<std::uint64_t> level_orders() const override {
    std::vector<std::uint64_t> out;
    std::uint64_t w = 1;
    for (std::size_t k = 0; k < orders_.size(); ++k) {
      w *= orders_[k];
      if (k == 0 || w > out.back()) out.push_back(w);
    }
    return out;
  }

  std::uint64_t mul(std::uint64_t x, std::uint64_t y) const override {
    std::uint64_t r = 0;
    for (std::size_t k = 0; k < orders_.size() && (x | y); ++k) {
      const auto n = orders_[k];
      const auto d = (x % n + y % n) % n;
      x /= n;
      y /= n;
      r += d * weights_[k];
    }
    return r;
  }

  std::uint64_t inv(std::uint64_t x) const override {
    std::uint64_t r = 0;
    for (std::size_t k = 0; k < orders_.size() && x; ++k) {
      const auto n = orders_[k];
      const auto d = x % n;
      x /= n;
      r += ((n - d) % n) * weights_[k];
    }
    return r;
  }

  std::uint64_t element_order(std::uint64_t x) const {
    std::uint64_t ord = 1;
    for (std::size_t k = 0; k < orders_.size() && x; ++k) {
      const auto n = orders_[k];
      const auto d = x % n;
      x /= n;
      if (d != 0) ord = std::lcm(ord, n / std::gcd(n, d));
    }
    return ord;
  }

  std::vector<Element> generators() const override {
    std::vector<Element> out;
    for (std::size_t k = 0; k < orders_.size(); ++k)
      if (orders_[k] > 1) out.push_back(Element{weights_[k]});
    return out;
  }

  std::optional<AbelianSubgroup> abelian_subgroup(std::uint64_t level_order) const override {
    std::size_t factors = 0;
    std::uint64_t w = 1;
    while (factors < orders_.size() && w < level_order) w *= orders_[factors++];
    if (w != level_order) return std::nullopt;
    AbelianSubgroup a;
    std::vector<std::size_t> used;
    for (std::size_t k = 0; k < factors; ++k) {
      if (orders_[k] > 1) {
        used.push_back(k);
        a.factor_orders.push_back(static_cast<std::uint32_t>(orders_[k]));
      }
    }
    a.elements.reserve(level_order);
    a.coordinates.reserve(level_order * used.size());
    for (std::uint64_t id = 0; id < level_order; ++id) {
      a.elements.push_back(Element{id});
      for (auto k : used) a.coordinates.push_back(static_cast<std::uint32_t>((id / weights_[k]) % orders_[k]));
    }
    a.coset_representatives = {Element{0}};
    return a;
  }

  const std::vector<std::uint64_t>& orders() const { return orders_; }
  const std::vector<std::uint64_t>& weights() const { return weights_; }

 private:
  std::vector<std::uint64_t> orders_;
  std::vector<std::uint64_t> weights_;
};

// Element (f, h) with f: H -> H, H = C_2^depth as bitmasks. Bits are packed
// level by level so that K_i is an id prefix.
class LeptinHulanickiModel final : public GroupModel {
 public:
  explicit LeptinHulanickiModel(std::size_t depth) : depth_(depth), size_(std::size_t{1} << depth) {
    for (std::size_t level = 1; level <= depth_; ++level) {
      const std::size_t lo = std::size_t{1} << (level - 1);
      const std::size_t hi = std::size_t{1} << level;
      layout_.push_back({0, level - 1});
      for (std::size_t k = 0; k < lo; ++k) layout_.push_back({1 + k, level - 1});
      for (std::size_t k = lo; k < hi; ++k)
        for (std::size_t b = 0; b < level; ++b) layout_.push_back({1 + k, b});
      level_bits_.push_back(layout_.size());
    }
    if (layout_.size() >= 64) throw SizeError("leptin_hulanicki: depth exceeds the 64-bit element encoding");
  }

  std::string name() const override { return "leptin_hulanicki(" + std::to_string(depth_) + ")"; }

  std::vector<std::uint64_t> level_orders() const override {
    std::vector<std::uint64_t> out;
    for (auto bits : level_bits_) out.push_back(std::uint64_t{1} << bits);
    return out;
  }

  std::uint64_t mul(std::uint64_t x, std::uint64_t y) const override {
    Components a = unpack(x), b = unpack(y), r{};
    const auto h1 = a[0];
    r[0] = a[0] ^ b[0];
    for (std::size_t k = 0; k < size_; ++k) r[1 + k] = a[1 + k] ^ b[1 + (k ^ h1)];
    return pack(r);
  }

  std::uint64_t inv(std::uint64_t x) const override {
    Components a = unpack(x), r{};
    r[0] = a[0];
    for (std::size_t k = 0; k < size_; ++k) r[1 + k] = a[1 + (k ^ a[0])];
    return pack(r);
  }

  std::vector<Element> generators() const override {
    std::vector<Element> out;
    for (std::size_t j = 0; j < depth_; ++j) {
      Components top{}, base{};
      top[0] = static_cast<std::uint8_t>(1u << j);
      base[1] = static_cast<std::uint8_t>(1u << j);
      out.push_back(Element{pack(top)});
      out.push_back(Element{pack(base)});
    }
    return out;
  }

  std::optional<AbelianSubgroup> abelian_subgroup(std::uint64_t level_order) const override {
    std::size_t level = 0;
    for (std::size_t i = 0; i < level_bits_.size(); ++i)
      if ((std::uint64_t{1} << level_bits_[i]) == level_order) level = i + 1;
    if (level == 0) return std::nullopt;
    const std::size_t width = std::size_t{1} << level;
    const std::size_t bits = width * level;
    if (bits > 20) return std::nullopt;
    AbelianSubgroup a;
    a.factor_orders.assign(bits, 2);
    const std::uint64_t count = std::uint64_t{1} << bits;
    a.elements.reserve(count);
    a.coordinates.reserve(count * bits);
    for (std::uint64_t code = 0; code < count; ++code) {
      Components c{};
      for (std::size_t k = 0; k < width; ++k)
        c[1 + k] = static_cast<std::uint8_t>((code >> (k * level)) & (width - 1));
      a.elements.push_back(Element{pack(c)});
      for (std::size_t b = 0; b < bits; ++b) a.coordinates.push_back(static_cast<std::uint32_t>((code >> b) & 1));
    }
    for (std::size_t h = 0; h < width; ++h) {
      Components c{};
      c[0] = static_cast<std::uint8_t>(h);
      a.coset_representatives.push_back(Element{pack(c)});
    }
    return a;
  }

 private:
  // Component 0 is h, component 1 + k is f(k). depth <= 3 keeps this small.
  using Components = std::array<std::uint8_t, 1 + 8>;

  struct Slot {
    std::size_t component;
    std::size_t bit;
  };

  Components unpack(std::uint64_t id) const {
    Components c{};
    for (std::size_t i = 0; id; ++i, id >>= 1)
      if (id & 1) c[layout_[i].component] |= static_cast<std::uint8_t>(1u << layout_[i].bit);
    return c;
  }

  std::uint64_t pack(const Components& c) const {
    std::uint64_t id = 0;
    for (std::size_t i = 0; i < layout_.size(); ++i)
      if ((c[layout_[i].component] >> layout_[i].bit) & 1) id |= std::uint64_t{1} << i;
    return id;
  }

  std::size_t depth_;
  std::size_t size_;
  std::vector<Slot> layout_;
  std::vector<std::size_t> level_bits_;
};

}  // namespace

struct GroupChain::Tables {
  std::uint64_t n = 0;
  std::vector<std::uint32_t> mul;
  std::vector<std::uint32_t> inv;
};

GroupChain::GroupChain(std::shared_ptr<const GroupModel> model, std::vector<std::uint64_t> orders,
                       ChainOptions options)
    : model_(std::move(model)), orders_(std::move(orders)), options_(options) {
  if (!model_) throw ValidationError("group chain: null model");
  if (orders_.empty()) throw ValidationError("group chain: no levels");
  const auto natural = model_->level_orders();
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (std::find(natural.begin(), natural.end(), orders_[i]) == natural.end())
      throw ValidationError("group chain: " + std::to_string(orders_[i]) + " is not a level order of " +
                            model_->name());
    if (i > 0 && (orders_[i] <= orders_[i - 1] || orders_[i] % orders_[i - 1] != 0))
      throw ValidationError("group chain: levels must be proper nested subgroups");
  }
  if (!options_.lazy && orders_.back() > options_.enumeration_cap)
    throw SizeError("group chain: |K_" + std::to_string(orders_.size()) + "| = " +
                    std::to_string(orders_.back()) + " exceeds the enumeration cap " +
                    std::to_string(options_.enumeration_cap));
  name_ = model_->name();

  std::uint64_t n = 0;
  for (auto o : natural)
    if (o <= kTableOrderLimit && o <= options_.enumeration_cap) n = std::max(n, o);
  if (n > 0) {
    auto t = std::make_shared<Tables>();
    t->n = n;
    t->mul.resize(n * n);
    t->inv.resize(n);
    for (std::uint64_t x = 0; x < n; ++x) {
      t->inv[x] = static_cast<std::uint32_t>(model_->inv(x));
      for (std::uint64_t y = 0; y < n; ++y) t->mul[x * n + y] = static_cast<std::uint32_t>(model_->mul(x, y));
    }
    tables_ = std::move(t);
  }
}

std::uint64_t GroupChain::order(std::size_t level) const {
  if (level < 1 || level > orders_.size())
    throw ValidationError("group chain: level " + std::to_string(level) + " out of range");
  return orders_[level - 1];
}

std::vector<std::uint64_t> GroupChain::indices() const {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 1; i < orders_.size(); ++i) out.push_back(orders_[i] / orders_[i - 1]);
  return out;
}

Element GroupChain::mul(Element x, Element y) const {
  if (tables_ && x.id < tables_->n && y.id < tables_->n) return Element{tables_->mul[x.id * tables_->n + y.id]};
  return Element{model_->mul(x.id, y.id)};
}

Element GroupChain::inv(Element x) const {
  if (tables_ && x.id < tables_->n) return Element{tables_->inv[x.id]};
  return Element{model_->inv(x.id)};
}

Element GroupChain::pow(Element x, std::uint64_t n) const {
  Element result = identity();
  Element base = x;
  while (n) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

std::uint64_t GroupChain::element_order(Element x) const {
  if (auto* cyc = dynamic_cast<const CyclicSumModel*>(model_.get())) return cyc->element_order(x.id);
  std::uint64_t n = 1;
  for (Element p = x; p != identity(); p = mul(p, x)) ++n;
  return n;
}

std::size_t GroupChain::level_of(Element x) const {
  auto it = std::upper_bound(orders_.begin(), orders_.end(), x.id);
  if (it == orders_.end()) throw ValidationError("group chain: element outside the materialized levels");
  return static_cast<std::size_t>(it - orders_.begin()) + 1;
}

bool GroupChain::enumerable(std::size_t level) const { return order(level) <= options_.enumeration_cap; }

void GroupChain::require_enumerable(std::size_t level) const {
  if (!enumerable(level))
    throw EnumerationError("group chain: level " + std::to_string(level) + " of " + name_ +
                           " is not enumerable");
}

double GroupChain::point_mass() const {
  return options_.haar == HaarNormalization::normalized ? 1.0 / static_cast<double>(orders_.front()) : 1.0;
}

Rational GroupChain::exact_point_mass() const {
  if (options_.haar == HaarNormalization::counting) return Rational(1);
  return Rational(1) / Rational(orders_.front());
}

Rational GroupChain::measure(std::size_t level) const { return Rational(order(level)) * exact_point_mass(); }

std::vector<Element> GroupChain::generators() const {
  std::vector<Element> out;
  for (auto g : model_->generators())
    if (contains(g)) out.push_back(g);
  return out;
}

std::optional<AbelianSubgroup> GroupChain::abelian_subgroup(std::size_t level) const {
  return model_->abelian_subgroup(order(level));
}

GroupChain GroupChain::select_levels(const std::vector<std::size_t>& levels) const {
  std::vector<std::uint64_t> orders;
  for (auto l : levels) orders.push_back(order(l));
  GroupChain copy = *this;
  copy.orders_ = std::move(orders);
  if (copy.orders_.empty()) throw ValidationError("group chain: empty level selection");
  for (std::size_t i = 1; i < copy.orders_.size(); ++i)
    if (copy.orders_[i] <= copy.orders_[i - 1]) throw ValidationError("group chain: levels must increase");
  return copy;
}

GroupChain GroupChain::with_haar(HaarNormalization haar) const {
  GroupChain copy = *this;
  copy.options_.haar = haar;
  return copy;
}

bool operator==(const GroupChain& a, const GroupChain& b) {
  return a.model_ == b.model_ && a.orders_ == b.orders_ && a.options_.haar == b.options_.haar;
}

ShellModel::ShellModel(std::vector<std::uint64_t> indices, bool bounded_tail)
    : indices_(std::move(indices)), bounded_tail_(bounded_tail) {
  for (auto d : indices_)
    if (d < 2) throw ValidationError("shell model: every index must be >= 2");
}

ShellModel ShellModel::constant(std::uint64_t index, std::size_t levels) {
  if (levels < 1) throw ValidationError("shell model: need at least one level");
  return ShellModel(std::vector<std::uint64_t>(levels - 1, index), true);
}

Rational ShellModel::measure(std::size_t level) const {
  if (level < 1 || level > levels()) throw ValidationError("shell model: level out of range");
  Rational m(1);
  for (std::size_t j = 0; j + 1 < level; ++j) m *= indices_[j];
  return m;
}

std::uint64_t ShellModel::max_index() const {
  return indices_.empty() ? 1 : *std::max_element(indices_.begin(), indices_.end());
}

GroupChain build_cyclic_sum(const std::vector<std::uint64_t>& orders, std::size_t depth, ChainOptions options) {
  if (depth < 1) throw ValidationError("cyclic_sum: depth must be >= 1");
  if (depth > orders.size()) throw ValidationError("cyclic_sum: depth exceeds the number of orders");
  std::vector<std::uint64_t> used(orders.begin(), orders.begin() + static_cast<std::ptrdiff_t>(depth));
  for (auto n : used)
    if (n == 0) throw ValidationError("cyclic_sum: order 0 is not a group");
  auto model = std::make_shared<const CyclicSumModel>(used);
  auto levels = model->level_orders();
  return GroupChain(std::move(model), std::move(levels), options);
}

Element cyclic_sum_element(const GroupChain& chain, const std::vector<std::uint64_t>& digits) {
  const auto* cyc = dynamic_cast<const CyclicSumModel*>(&chain.model());
  if (!cyc) throw ValidationError("cyclic_sum_element: chain is not a cyclic sum");
  if (digits.size() > cyc->orders().size()) throw ValidationError("cyclic_sum_element: too many coordinates");
  std::uint64_t id = 0;
  for (std::size_t k = 0; k < digits.size(); ++k) {
    if (digits[k] >= cyc->orders()[k]) throw ValidationError("cyclic_sum_element: coordinate out of range");
    id += digits[k] * cyc->weights()[k];
  }
  Element x{id};
  if (!chain.contains(x)) throw ValidationError("cyclic_sum_element: element outside the chain");
  return x;
}

std::vector<std::uint64_t> cyclic_sum_digits(const GroupChain& chain, Element x) {
  const auto* cyc = dynamic_cast<const CyclicSumModel*>(&chain.model());
  if (!cyc) throw ValidationError("cyclic_sum_digits: chain is not a cyclic sum");
  std::vector<std::uint64_t> d;
  auto id = x.id;
  for (auto n : cyc->orders()) {
    d.push_back(id % n);
    id /= n;
  }
  return d;
}

std::vector<std::uint64_t> cyclic_sum_orders(const GroupChain& chain) {
  const auto* cyc = dynamic_cast<const CyclicSumModel*>(&chain.model());
  return cyc ? cyc->orders() : std::vector<std::uint64_t>{};
}

GroupChain build_leptin_hulanicki(std::size_t depth, ChainOptions options) {
  if (depth < 1) throw ValidationError("leptin_hulanicki: depth must be >= 1");
  if (depth > 3) throw SizeError("leptin_hulanicki: depth > 3 exceeds the 64-bit element encoding");
  if (depth >= 3 && !options.lazy)
    throw SizeError("leptin_hulanicki: depth >= 3 can only be built lazily (order 2^27)");
  auto model = std::make_shared<const LeptinHulanickiModel>(depth);
  auto levels = model->level_orders();
  return GroupChain(std::move(model), std::move(levels), options);
}

std::vector<std::size_t> standard_levels(const std::vector<std::uint64_t>& indices) {
  std::vector<std::size_t> kept{1};
  std::uint64_t previous = 0;
  std::uint64_t pending = 1;
  std::uint64_t last_emitted = 0;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    pending *= indices[i];
    if (pending >= previous) {
      kept.push_back(i + 2);
      previous = pending;
      last_emitted = pending;
      pending = 1;
    }
  }
  if (pending > 1) {
    // Leftover levels merge into the last emitted step; its index only grows.
    if (last_emitted == 0) kept.push_back(indices.size() + 1);
    else kept.back() = indices.size() + 1;
  }
  return kept;
}

bool is_standard(const std::vector<std::uint64_t>& indices) {
  return std::is_sorted(indices.begin(), indices.end());
}

GroupChain standardize(const GroupChain& chain) {
  if (chain.levels() < 2) throw ValidationError("standardize: chain needs at least two levels");
  return chain.select_levels(standard_levels(chain.indices()));
}

std::vector<Rational> shell_measures(const GroupChain& chain) {
  std::vector<Rational> out;
  Rational prev(0);
  for (std::size_t i = 1; i <= chain.levels(); ++i) {
    Rational m = chain.measure(i);
    out.push_back(m - prev);
    prev = m;
  }
  return out;
}

std::vector<Rational> shell_measures(const ShellModel& model) {
  std::vector<Rational> out;
  Rational prev(0);
  for (std::size_t i = 1; i <= model.levels(); ++i) {
    Rational m = model.measure(i);
    out.push_back(m - prev);
    prev = m;
  }
  return out;
}

}  // namespace orlab
