// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "orlab/group_chain.hpp"

namespace orlab {

using Complex = std::complex<double>;

/// Finitely supported complex function on a GroupChain. Only nonzero values
/// are stored, sorted by element.
class FinSuppFun {
 public:
  using Entry = std::pair<Element, Complex>;

  explicit FinSuppFun(GroupChain chain) : chain_(std::move(chain)) {}

  static FinSuppFun zero(const GroupChain& chain) { return FinSuppFun(chain); }
  static FinSuppFun delta(const GroupChain& chain, Element x, Complex c = 1.0);
  /// delta_e / m, the unit of the convolution algebra.
  static FinSuppFun unit(const GroupChain& chain);
  /// chi_{K_level}.
  static FinSuppFun indicator(const GroupChain& chain, std::size_t level);
  /// Values indexed by the elements of K_level.
  static FinSuppFun from_dense(const GroupChain& chain, std::size_t level, const std::vector<Complex>& values);
  static FinSuppFun from_entries(const GroupChain& chain, std::vector<Entry> entries);

  const GroupChain& chain() const { return chain_; }
  const std::vector<Entry>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  Complex operator()(Element x) const;
  void set(Element x, Complex v);
  /// Smallest level containing the support (1 for the zero function).
  std::size_t support_level() const;
  std::vector<Complex> to_dense(std::size_t level) const;

  FinSuppFun& operator+=(const FinSuppFun& g);
  FinSuppFun& operator-=(const FinSuppFun& g);
  FinSuppFun& operator*=(Complex c);

  friend FinSuppFun operator+(FinSuppFun f, const FinSuppFun& g) { return f += g; }
  friend FinSuppFun operator-(FinSuppFun f, const FinSuppFun& g) { return f -= g; }
  friend FinSuppFun operator*(Complex c, FinSuppFun f) { return f *= c; }
  friend FinSuppFun operator*(FinSuppFun f, Complex c) { return f *= c; }

  /// max |f(x) - g(x)|.
  friend double max_abs_diff(const FinSuppFun& f, const FinSuppFun& g);

 private:
  void require_same_chain(const FinSuppFun& g) const;
  void combine(const FinSuppFun& g, double sign);

  GroupChain chain_;
  std::vector<Entry> entries_;
};

}  // namespace orlab
