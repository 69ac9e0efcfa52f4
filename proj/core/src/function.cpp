// SPDX-License-Identifier: Apache-2.0
#include "orlab/function.hpp"

#include <algorithm>

#include "orlab/error.hpp"

namespace orlab {

namespace {

bool by_element(const FinSuppFun::Entry& a, const FinSuppFun::Entry& b) { return a.first < b.first; }

}  // namespace

FinSuppFun FinSuppFun::delta(const GroupChain& chain, Element x, Complex c) {
  FinSuppFun f(chain);
  f.set(x, c);
  return f;
}

FinSuppFun FinSuppFun::unit(const GroupChain& chain) {
  return delta(chain, chain.identity(), 1.0 / chain.point_mass());
}

FinSuppFun FinSuppFun::indicator(const GroupChain& chain, std::size_t level) {
  FinSuppFun f(chain);
  for (auto x : chain.elements(level)) f.entries_.emplace_back(x, 1.0);
  return f;
}

FinSuppFun FinSuppFun::from_dense(const GroupChain& chain, std::size_t level, const std::vector<Complex>& values) {
  if (values.size() != chain.order(level)) throw ValidationError("from_dense: size does not match |K_level|");
  FinSuppFun f(chain);
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] != Complex(0)) f.entries_.emplace_back(Element{i}, values[i]);
  return f;
}

FinSuppFun FinSuppFun::from_entries(const GroupChain& chain, std::vector<Entry> entries) {
  FinSuppFun f(chain);
  std::sort(entries.begin(), entries.end(), by_element);
  for (auto& [x, v] : entries) {
    if (!chain.contains(x)) throw ValidationError("from_entries: element outside the chain");
    if (!f.entries_.empty() && f.entries_.back().first == x) f.entries_.back().second += v;
    else f.entries_.emplace_back(x, v);
  }
  std::erase_if(f.entries_, [](const Entry& e) { return e.second == Complex(0); });
  return f;
}

Complex FinSuppFun::operator()(Element x) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{x, 0.0}, by_element);
  return it != entries_.end() && it->first == x ? it->second : Complex(0);
}

void FinSuppFun::set(Element x, Complex v) {
  if (!chain_.contains(x)) throw ValidationError("FinSuppFun::set: element outside the chain");
  auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{x, 0.0}, by_element);
  const bool found = it != entries_.end() && it->first == x;
  if (v == Complex(0)) {
    if (found) entries_.erase(it);
  } else if (found) {
    it->second = v;
  } else {
    entries_.insert(it, Entry{x, v});
  }
}

std::size_t FinSuppFun::support_level() const {
  return entries_.empty() ? 1 : chain_.level_of(entries_.back().first);
}

std::vector<Complex> FinSuppFun::to_dense(std::size_t level) const {
  chain_.require_enumerable(level);
  if (support_level() > level) throw ValidationError("to_dense: support exceeds the requested level");
  std::vector<Complex> out(chain_.order(level));
  for (const auto& [x, v] : entries_) out[x.id] = v;
  return out;
}

void FinSuppFun::require_same_chain(const FinSuppFun& g) const {
  if (!(chain_ == g.chain_)) throw ChainMismatchError("functions live on different chains");
}

void FinSuppFun::combine(const FinSuppFun& g, double sign) {
  require_same_chain(g);
  std::vector<Entry> out;
  out.reserve(entries_.size() + g.entries_.size());
  auto a = entries_.cbegin();
  auto b = g.entries_.cbegin();
  while (a != entries_.end() || b != g.entries_.end()) {
    if (b == g.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      out.emplace_back(b->first, sign * b->second);
      ++b;
    } else {
      const Complex v = a->second + sign * b->second;
      if (v != Complex(0)) out.emplace_back(a->first, v);
      ++a;
      ++b;
    }
  }
  entries_ = std::move(out);
}

FinSuppFun& FinSuppFun::operator+=(const FinSuppFun& g) {
  combine(g, 1.0);
  return *this;
}

FinSuppFun& FinSuppFun::operator-=(const FinSuppFun& g) {
  combine(g, -1.0);
  return *this;
}

FinSuppFun& FinSuppFun::operator*=(Complex c) {
  if (c == Complex(0)) {
    entries_.clear();
    return *this;
  }
  for (auto& e : entries_) e.second *= c;
  std::erase_if(entries_, [](const Entry& e) { return e.second == Complex(0); });
  return *this;
}

double max_abs_diff(const FinSuppFun& f, const FinSuppFun& g) {
  const FinSuppFun d = f - g;
  double m = 0;
  for (const auto& e : d) m = std::max(m, std::abs(e.second));
  return m;
}

}  // namespace orlab
