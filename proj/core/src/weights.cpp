// SPDX-License-Identifier: Apache-2.0
#include "orlab/weights.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <boost/math/special_functions/zeta.hpp>

#include "orlab/error.hpp"

namespace orlab {

namespace {

constexpr std::uint64_t kCyclicCap = 10000000;

void check_radial_values(const std::vector<double>& a, std::size_t levels) {
  if (a.size() != levels)
    throw ValidationError("radial weight: expected " + std::to_string(levels) + " shell values, got " +
                          std::to_string(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] >= 1) || !std::isfinite(a[i])) throw ValidationError("radial weight: values must be finite and >= 1");
    if (i > 0 && a[i] < a[i - 1]) throw ValidationError("radial weight: values must be non-decreasing");
  }
}

bool non_decreasing(const std::vector<double>& a) { return std::is_sorted(a.begin(), a.end()); }

}  // namespace

Weight Weight::trivial(const GroupChain& chain) {
  return radial(chain, std::vector<double>(chain.levels(), 1.0), "trivial");
}

Weight Weight::radial(const GroupChain& chain, std::vector<double> a, std::string name) {
  check_radial_values(a, chain.levels());
  return radial_unchecked(chain, std::move(a), std::move(name));
}

Weight Weight::radial(const ShellModel& model, std::vector<double> a, std::string name) {
  check_radial_values(a, model.levels());
  return radial_unchecked(model, std::move(a), std::move(name));
}

Weight Weight::radial_unchecked(const GroupChain& chain, std::vector<double> a, std::string name) {
  if (a.size() != chain.levels()) throw ValidationError("radial weight: one value per level required");
  Weight w;
  w.name_ = std::move(name);
  w.radial_ = true;
  w.chain_ = chain;
  if (non_decreasing(a)) w.max_form_ = 1.0;
  w.a_ = std::move(a);
  return w;
}

Weight Weight::radial_unchecked(const ShellModel& model, std::vector<double> a, std::string name) {
  if (a.size() != model.levels()) throw ValidationError("radial weight: one value per level required");
  Weight w;
  w.name_ = std::move(name);
  w.radial_ = true;
  w.shells_ = model;
  if (non_decreasing(a)) w.max_form_ = 1.0;
  w.a_ = std::move(a);
  return w;
}

Weight Weight::pointwise(const GroupChain& chain, Pointwise omega, std::string name) {
  if (!omega) throw ValidationError("pointwise weight: empty evaluator");
  Weight w;
  w.name_ = std::move(name);
  w.chain_ = chain;
  w.pointwise_ = std::move(omega);
  std::size_t top = 0;
  for (std::size_t l = 1; l <= chain.levels(); ++l)
    if (chain.enumerable(l)) top = l;
  if (top > 0) {
    auto table = std::make_shared<std::vector<double>>(chain.order(top));
    for (std::uint64_t id = 0; id < table->size(); ++id) {
      const double v = w.pointwise_(Element{id});
      if (!(v >= 1)) throw ValidationError("pointwise weight: value below 1 at element " + std::to_string(id));
      (*table)[id] = v;
    }
    w.table_ = std::move(table);
  }
  return w;
}

double Weight::operator()(Element x) const {
  if (radial_) {
    if (!chain_) throw ValidationError("weight " + name_ + " lives on a shell model; evaluate shells instead");
    return a_[chain_->level_of(x) - 1];
  }
  if (table_ && x.id < table_->size()) return (*table_)[x.id];
  if (!chain_->contains(x)) throw ValidationError("weight: element outside the chain");
  return pointwise_(x);
}

const std::vector<double>& Weight::shell_values() const {
  if (!radial_) throw ValidationError("weight " + name_ + " is not radial");
  return a_;
}

std::size_t Weight::levels() const { return chain_ ? chain_->levels() : shells_->levels(); }

const GroupChain& Weight::chain() const {
  if (!chain_) throw ValidationError("weight " + name_ + " has no group chain");
  return *chain_;
}

const ShellModel& Weight::shell_model() const {
  if (!shells_) throw ValidationError("weight " + name_ + " has no shell model");
  return *shells_;
}

std::vector<double> Weight::shell_measures() const {
  const auto exact = chain_ ? orlab::shell_measures(*chain_) : orlab::shell_measures(*shells_);
  std::vector<double> out;
  for (const auto& r : exact) out.push_back(r.convert_to<double>());
  return out;
}

Weight Weight::with_certificate(LqCertificate c) const {
  Weight w = *this;
  w.lq_ = std::move(c);
  return w;
}

Weight Weight::with_flags(bool heuristic, bool nonstandard) const {
  Weight w = *this;
  w.heuristic_ = heuristic;
  w.nonstandard_ = nonstandard;
  return w;
}

Weight Weight::renamed(std::string name) const {
  Weight w = *this;
  w.name_ = std::move(name);
  return w;
}

namespace {

template <class Reduce>
double level_reduce(const Weight& omega, std::size_t level, bool* sampled, double init, Reduce reduce) {
  if (sampled) *sampled = false;
  if (omega.is_radial()) {
    const auto& a = omega.shell_values();
    if (level < 1 || level > a.size()) throw ValidationError("weight: level out of range");
    double r = init;
    for (std::size_t i = 0; i < level; ++i) r = reduce(r, a[i]);
    return r;
  }
  const auto& chain = omega.chain();
  const auto n = chain.order(level);
  double r = init;
  if (chain.enumerable(level)) {
    for (std::uint64_t id = 0; id < n; ++id) r = reduce(r, omega(Element{id}));
    return r;
  }
  if (sampled) *sampled = true;
  std::mt19937_64 rng(0x5eed0000 + level);
  std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
  r = reduce(r, omega(chain.identity()));
  for (auto g : chain.generators())
    if (g.id < n) r = reduce(r, omega(g));
  for (std::size_t s = 0; s < kSupSamples; ++s) r = reduce(r, omega(Element{pick(rng)}));
  return r;
}

}  // namespace

double level_sup(const Weight& omega, std::size_t level, bool* sampled) {
  return level_reduce(omega, level, sampled, 0.0, [](double a, double b) { return std::max(a, b); });
}

double level_inf(const Weight& omega, std::size_t level, bool* sampled) {
  return level_reduce(omega, level, sampled, std::numeric_limits<double>::infinity(),
                      [](double a, double b) { return std::min(a, b); });
}

Weight sharpen(const Weight& omega) {
  std::vector<double> a;
  bool heuristic = omega.heuristic();
  if (omega.is_radial()) {
    double run = 0;
    for (double v : omega.shell_values()) a.push_back(run = std::max(run, v));
  } else {
    for (std::size_t l = 1; l <= omega.levels(); ++l) {
      bool sampled = false;
      a.push_back(level_sup(omega, l, &sampled));
      heuristic = heuristic || sampled;
    }
    for (std::size_t i = 1; i < a.size(); ++i) a[i] = std::max(a[i], a[i - 1]);
  }
  const std::string name = "sharp(" + omega.name() + ")";
  Weight w = omega.on_chain() ? Weight::radial(omega.chain(), std::move(a), name)
                              : Weight::radial(omega.shell_model(), std::move(a), name);
  return w.with_flags(heuristic, false);
}

double conjugate_exponent(double p) {
  if (!(p >= 1)) throw ValidationError("conjugate exponent: p must be >= 1");
  if (p == 1) return 1;
  if (std::isinf(p)) return 1;
  return p / (p - 1);
}

Weight sharpen_p(const Weight& omega, double p) {
  if (!(p >= 1)) throw ValidationError("sharpen_p: p must be >= 1");
  const double q = conjugate_exponent(p);
  const Weight sharp = sharpen(omega);
  const auto& a = sharp.shell_values();
  const auto mu = sharp.shell_measures();
  std::vector<double> v(a.size());
  v[0] = a[0] + 1;
  for (std::size_t i = 1; i < a.size(); ++i) {
    const double idx = static_cast<double>(i + 1);
    v[i] = (a[i] + idx * idx) * std::pow(mu[i], 1 / q);
  }
  const auto indices = omega.on_chain() ? omega.chain().indices() : omega.shell_model().indices();
  const bool nonstandard = !is_standard(indices);
  const std::string name = "sharp_p(" + omega.name() + ")";
  Weight w = omega.on_chain() ? Weight::radial_unchecked(omega.chain(), v, name)
                              : Weight::radial_unchecked(omega.shell_model(), v, name);
  const double head = mu[0] / std::pow(a[0] + 1, q);
  LqCertificate cert;
  cert.q = q;
  cert.bound_upto = [head, q](std::size_t L) {
    double s = head;
    for (std::size_t i = 2; i <= L; ++i) s += std::pow(static_cast<double>(i), -2 * q);
    return s;
  };
  cert.limit = head + boost::math::zeta(2 * q) - 1;
  cert.description = "mu(K_1)/(a_1+1)^q + sum_{i>=2} i^{-2q}";
  return w.with_flags(sharp.heuristic(), nonstandard).with_certificate(std::move(cert));
}

double variation(const Weight& omega, std::size_t upto) {
  if (upto < 1 || upto > omega.levels()) throw ValidationError("variation: level out of range");
  double v = 0;
  for (std::size_t l = 1; l <= upto; ++l) v = std::max(v, level_sup(omega, l) - level_inf(omega, l));
  return v;
}

GrsSequence grs_sequence(const Weight& omega, Element x, std::size_t N) {
  const auto& chain = omega.chain();
  if (!chain.contains(x)) throw ValidationError("grs_sequence: element outside the chain");
  GrsSequence s;
  s.order = chain.element_order(x);
  if (s.order > kCyclicCap) throw SizeError("grs_sequence: cyclic subgroup too large to scan");
  Element y = chain.identity();
  double C = 0;
  for (std::uint64_t k = 0; k < s.order; ++k) {
    C = std::max(C, omega(y));
    y = chain.mul(y, x);
  }
  s.cyclic_sup = C;
  y = x;
  for (std::size_t n = 1; n <= N; ++n) {
    const double e = 1.0 / static_cast<double>(n);
    const double v = std::pow(omega(y), e);
    s.values.push_back(v);
    if (!(v >= 1 && v <= std::pow(C, e))) s.contained = false;
    y = chain.mul(y, x);
  }
  return s;
}

double UniformGrsWeight::operator()(std::int64_t n) const {
  const auto k = static_cast<std::size_t>(n < 0 ? -n : n);
  return values_[std::min(k, values_.size() - 1)];
}

std::vector<double> UniformGrsWeight::root_sequence() const {
  std::vector<double> out;
  for (std::size_t n = 1; n < values_.size(); ++n) out.push_back(std::pow(values_[n], 1.0 / static_cast<double>(n)));
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> UniformGrsWeight::submultiplicativity_violation() const {
  const std::size_t L = values_.size() - 1;
  for (std::size_t m = 0; m <= L; ++m)
    for (std::size_t n = 0; n <= L; ++n) {
      const auto s = static_cast<std::int64_t>(m + n);
      if ((*this)(s) > (*this)(static_cast<std::int64_t>(m)) * (*this)(static_cast<std::int64_t>(n)))
        return std::make_pair(m, n);
    }
  return std::nullopt;
}

UniformGrsWeight uniform_grs_weight(const Weight& omega) {
  std::vector<double> v;
  bool heuristic = false, sampled = false;
  v.push_back(level_sup(omega, 1, &sampled));
  heuristic = sampled;
  for (std::size_t n = 1; n <= omega.levels(); ++n) {
    v.push_back(level_sup(omega, n, &sampled));
    heuristic = heuristic || sampled;
  }
  return UniformGrsWeight(std::move(v), heuristic);
}

LqMembership lq_membership(const Weight& omega, double q, std::size_t L) {
  if (!(q > 0)) throw ValidationError("lq_membership: q must be > 0");
  if (L < 1 || L > omega.levels()) throw ValidationError("lq_membership: L out of range");
  const auto& a = omega.shell_values();
  const auto mu = omega.shell_measures();
  LqMembership r;
  r.q = q;
  std::vector<double> terms;
  double s = 0;
  for (std::size_t i = 0; i < L; ++i) {
    terms.push_back(mu[i] / std::pow(a[i], q));
    s += terms.back();
    r.partial_sums.push_back(s);
  }
  const auto& cert = omega.lq_certificate();
  if (cert && cert->q == q) {
    for (std::size_t i = 1; i <= L; ++i) r.bounds.push_back(cert->bound_upto(i));
    r.limit = cert->limit;
    r.verdict = LqVerdict::convergent;
    r.heuristic = false;
    return r;
  }
  if (L < 3) return r;
  const std::size_t tail = std::min<std::size_t>(3, L - 1);
  double worst = 0, best = std::numeric_limits<double>::infinity();
  for (std::size_t i = L - tail; i < L; ++i) {
    const double ratio = terms[i] / terms[i - 1];
    worst = std::max(worst, ratio);
    best = std::min(best, ratio);
  }
  if (worst < 1) {
    r.verdict = LqVerdict::convergent;
    r.limit = s + terms.back() * worst / (1 - worst);
  } else if (best >= 1) {
    r.verdict = LqVerdict::divergent;
  }
  return r;
}

double SummableSequence::operator()(std::size_t n) const {
  const double x = static_cast<double>(n);
  return kind == Kind::geometric ? c * std::pow(r, x) : c * std::pow(x, -s);
}

double SummableSequence::sum() const {
  return kind == Kind::geometric ? c * r / (1 - r) : c * boost::math::zeta(s);
}

double SummableSequence::partial_sum(std::size_t L) const {
  double t = 0;
  for (std::size_t n = 1; n <= L; ++n) t += (*this)(n);
  return t;
}

std::string SummableSequence::describe() const {
  if (kind == Kind::geometric) return std::to_string(c) + "*" + std::to_string(r) + "^n";
  return std::to_string(c) + "*n^-" + std::to_string(s);
}

Weight wfq_weight(const ShellModel& model, const SummableSequence& f, double q) {
  if (!(q >= 1)) throw ValidationError("wfq_weight: q must be >= 1");
  if (!model.bounded_index()) throw ValidationError("wfq_weight: the model must have bounded index");
  if (!(f.c > 0)) throw ValidationError("wfq_weight: f must be positive");
  if (f.kind == SummableSequence::Kind::geometric && !(f.r > 0 && f.r < 1))
    throw ValidationError("wfq_weight: geometric f needs 0 < r < 1 to be summable");
  if (f.kind == SummableSequence::Kind::power && !(f.s > 1))
    throw ValidationError("wfq_weight: power f needs s > 1 to be summable");
  const double logM = std::log(static_cast<double>(model.max_index()));
  std::vector<double> v{1.0};
  for (std::size_t n = 1; n < model.levels(); ++n)
    v.push_back(std::exp((static_cast<double>(n) * logM - std::log(f(n))) / q));
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] >= 1) || v[i] < v[i - 1])
      throw ValidationError("wfq_weight: shell values must be >= 1 and non-decreasing");
  LqCertificate cert;
  cert.q = q;
  cert.bound_upto = [f](std::size_t L) { return 1 + f.partial_sum(L); };
  cert.limit = 1 + f.sum();
  cert.description = "1 + sum_{n<=L} f(n)";
  return Weight::radial(model, std::move(v), "wfq(" + f.describe() + ")").with_certificate(std::move(cert));
}

Weight nonsubadditive_example(const GroupChain& chain) {
  const auto orders = cyclic_sum_orders(chain);
  if (orders.empty()) throw ValidationError("nonsubadditive_example: chain is not a cyclic sum");
  for (std::size_t k = 0; k < orders.size(); ++k)
    if (orders[k] != k + 1) throw ValidationError("nonsubadditive_example: orders must be 1, 2, 3, ...");
  return Weight::pointwise(
      chain,
      [chain](Element x) {
        const auto d = cyclic_sum_digits(chain, x);
        double w = 1;
        for (std::size_t k = 0; k < d.size(); ++k) {
          if (d[k] == 0) continue;
          const auto n = k + 1;
          w *= std::pow(static_cast<double>(n), static_cast<double>(std::max(d[k], n - d[k])));
        }
        return w;
      },
      "example_nonsubadd");
}

std::vector<WitnessRow> nonsubadditive_witness(const Weight& example) {
  const auto& chain = example.chain();
  const auto depth = cyclic_sum_orders(chain).size();
  std::vector<WitnessRow> rows;
  for (std::size_t n = 1; 4 * n <= depth; ++n) {
    std::vector<std::uint64_t> da(depth, 0), db(depth, 0);
    da[2 * n - 1] = n;
    db[4 * n - 1] = 2 * n;
    const Element a = cyclic_sum_element(chain, da);
    const Element b = cyclic_sum_element(chain, db);
    WitnessRow row;
    row.n = n;
    row.ratio = example(chain.mul(a, b)) / (example(a) + example(b));
    const double u = std::pow(2.0 * n, static_cast<double>(n));
    const double v = std::pow(4.0 * n, 2.0 * n);
    row.closed_form = u * v / (u + v);
    rows.push_back(row);
  }
  return rows;
}

AxiomReport check_axioms(const Weight& omega, std::size_t level, std::uint64_t seed, std::uint64_t pair_cap) {
  const auto& chain = omega.chain();
  const std::uint64_t n = chain.order(level);
  AxiomReport r;
  r.level = level;
  r.level_max = 0;
  r.level_min = std::numeric_limits<double>::infinity();
  auto visit_pair = [&](Element x, Element y) {
    const double wx = omega(x), wy = omega(y), wxy = omega(chain.mul(x, y));
    const double sm = wxy / (wx * wy);
    r.max_submult_ratio = std::max(r.max_submult_ratio, sm);
    if (sm > 1 + 1e-12) r.submultiplicative = false;
    r.subadditive_constant = std::max(r.subadditive_constant, wxy / (wx + wy));
    r.max_form_constant = std::max(r.max_form_constant, wxy / std::max(wx, wy));
    ++r.pairs;
  };
  auto visit_point = [&](Element x) {
    const double w = omega(x);
    r.level_max = std::max(r.level_max, w);
    r.level_min = std::min(r.level_min, w);
    if (omega(chain.inv(x)) != w) r.symmetric = false;
  };
  const bool small = chain.enumerable(level) && n <= pair_cap / n;
  if (small) {
    for (std::uint64_t x = 0; x < n; ++x) {
      visit_point(Element{x});
      for (std::uint64_t y = 0; y < n; ++y) visit_pair(Element{x}, Element{y});
    }
    return r;
  }
  r.exhaustive = false;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
  const std::uint64_t samples = std::min<std::uint64_t>(pair_cap, 1000000);
  for (std::uint64_t s = 0; s < samples; ++s) {
    const Element x{pick(rng)}, y{pick(rng)};
    visit_point(x);
    visit_pair(x, y);
  }
  return r;
}

}  // namespace orlab
