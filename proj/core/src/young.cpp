// SPDX-License-Identifier: Apache-2.0
#include "orlab/young.hpp"

#include <cmath>
#include <cstdint>

#include <boost/math/tools/minima.hpp>

#include "orlab/error.hpp"

namespace orlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double exp_minus_eval(double x) { return std::expm1(x) - x; }

double exp_minus_dual_eval(double y) { return (1 + y) * std::log1p(y) - y; }

double cosh_eval(double x) {
  const double s = std::sinh(x / 2);
  return 2 * s * s;
}

double cosh_dual_eval(double y) {
  const double r = std::sqrt(1 + y * y);
  return y * std::asinh(y) - y * y / (r + 1);
}

double numeric_complement(const YoungFunction& phi, double y) {
  auto g = [&](double x) { return x * y - phi(x); };
  double hi = 1;
  double ghi = g(hi);
  // g is concave with g(0) = 0; double until it stops increasing.
  for (int i = 0; i < 1100; ++i) {
    const double next = g(2 * hi);
    if (!(next > ghi)) break;
    hi *= 2;
    ghi = next;
    if (hi > 1e300) return kInf;
  }
  if (!std::isfinite(ghi) && ghi > 0) return kInf;
  auto neg = [&](double x) { return -g(x); };
  std::uintmax_t iters = 500;
  const auto [x, v] =
      boost::math::tools::brent_find_minima(neg, 0.0, 2 * hi, std::numeric_limits<double>::digits / 2, iters);
  (void)x;
  return std::max(0.0, -v);
}

YoungFunction p_one_dual() {
  return YoungFunction::custom(
      "indicator[0,1]", [](double y) { return y <= 1 ? 0.0 : kInf; }, false);
}

}  // namespace

YoungFunction::YoungFunction(YoungKind kind, std::string name, Evaluator phi, bool finite, double p)
    : kind_(kind), name_(std::move(name)), phi_(std::move(phi)), finite_(finite), p_(p) {}

YoungFunction YoungFunction::p_power(double p) {
  if (!(p >= 1) || !std::isfinite(p)) throw ValidationError("p_power: p must be a finite real >= 1");
  Evaluator f;
  if (p == 1) f = [](double x) { return x; };
  else if (p == 2) f = [](double x) { return x * x / 2; };
  else f = [p](double x) { return std::pow(x, p) / p; };
  std::string name = "p_power(" + std::to_string(p) + ")";
  return YoungFunction(YoungKind::p_power, name, std::move(f), true, p);
}

YoungFunction YoungFunction::exp_minus() {
  return YoungFunction(YoungKind::exp_minus, "exp_minus", exp_minus_eval, true, 0);
}

YoungFunction YoungFunction::exp_minus_dual() {
  return YoungFunction(YoungKind::exp_minus_dual, "exp_minus_dual", exp_minus_dual_eval, true, 0);
}

YoungFunction YoungFunction::cosh_minus_one() {
  return YoungFunction(YoungKind::cosh, "cosh", cosh_eval, true, 0);
}

YoungFunction YoungFunction::cosh_dual() {
  return YoungFunction(YoungKind::cosh_dual, "cosh_dual", cosh_dual_eval, true, 0);
}

YoungFunction YoungFunction::xlog() {
  return YoungFunction(YoungKind::xlog, "xlog", [](double x) { return x * std::log1p(x); }, true, 0);
}

YoungFunction YoungFunction::custom(std::string name, Evaluator phi, bool finite) {
  if (!phi) throw ValidationError("custom Young function: empty evaluator");
  return YoungFunction(YoungKind::custom, std::move(name), std::move(phi), finite, 0);
}

double YoungFunction::operator()(double x) const { return phi_(std::abs(x)); }

bool YoungFunction::has_closed_complement() const {
  return kind_ != YoungKind::xlog && kind_ != YoungKind::custom;
}

std::optional<bool> YoungFunction::known_delta2() const {
  switch (kind_) {
    case YoungKind::p_power:
    case YoungKind::exp_minus_dual:
    case YoungKind::cosh_dual:
    case YoungKind::xlog:
      return true;
    case YoungKind::exp_minus:
    case YoungKind::cosh:
      return false;
    case YoungKind::custom:
      break;
  }
  return std::nullopt;
}

double complementary(const YoungFunction& phi, double y, ComplementMethod method) {
  if (!(y >= 0)) throw ValidationError("complementary: y must be >= 0");
  if (y == 0) return 0;
  if (method == ComplementMethod::automatic) {
    switch (phi.kind()) {
      case YoungKind::p_power: {
        const double p = phi.exponent();
        if (p == 1) return y <= 1 ? 0 : kInf;
        const double q = p / (p - 1);
        return std::pow(y, q) / q;
      }
      case YoungKind::exp_minus:
        return exp_minus_dual_eval(y);
      case YoungKind::exp_minus_dual:
        return exp_minus_eval(y);
      case YoungKind::cosh:
        return cosh_dual_eval(y);
      case YoungKind::cosh_dual:
        return cosh_eval(y);
      default:
        break;
    }
  }
  return numeric_complement(phi, y);
}

YoungFunction complement_of(const YoungFunction& phi) {
  switch (phi.kind()) {
    case YoungKind::p_power: {
      const double p = phi.exponent();
      if (p == 1) return p_one_dual();
      return YoungFunction::p_power(p / (p - 1));
    }
    case YoungKind::exp_minus:
      return YoungFunction::exp_minus_dual();
    case YoungKind::exp_minus_dual:
      return YoungFunction::exp_minus();
    case YoungKind::cosh:
      return YoungFunction::cosh_dual();
    case YoungKind::cosh_dual:
      return YoungFunction::cosh_minus_one();
    default:
      break;
  }
  const bool finite = std::isfinite(numeric_complement(phi, 10.0));
  return YoungFunction::custom(
      "complement(" + phi.name() + ")", [phi](double y) { return numeric_complement(phi, y); }, finite);
}

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
  if (!(lo > 0) || !(hi > lo) || n < 2) throw ValidationError("log_grid: need 0 < lo < hi and n >= 2");
  std::vector<double> g(n);
  const double a = std::log(lo), b = std::log(hi);
  for (std::size_t i = 0; i < n; ++i) g[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
  return g;
}

Delta2Result delta2_constant(const YoungFunction& phi, const std::vector<double>& grid) {
  if (!phi.finite()) throw ValidationError("delta2_constant: Phi takes infinite values");
  Delta2Result r;
  for (double x : grid) {
    const double a = phi(x);
    if (a == 0) continue;
    const double b = phi(2 * x);
    r.grid.push_back(x);
    // Overflow of a finite Phi is growth evidence, not a domain problem.
    r.ratios.push_back(std::isfinite(a) && std::isfinite(b) ? b / a : kInf);
  }
  if (r.ratios.empty()) throw ValidationError("delta2_constant: Phi vanishes on the whole grid");
  r.constant = 0;
  bool all_finite = true;
  for (double v : r.ratios) {
    r.constant = std::max(r.constant, v);
    all_finite = all_finite && std::isfinite(v);
  }
  bool settled = true;
  const std::size_t tail = std::max<std::size_t>(2, r.ratios.size() / 10);
  for (std::size_t i = r.ratios.size() - tail + 1; i < r.ratios.size(); ++i)
    if (r.ratios[i] > r.ratios[i - 1] * (1 + 1e-12)) settled = false;
  r.bounded = all_finite && settled;
  return r;
}

double young_inequality_margin(const YoungFunction& phi, double x, double y) {
  const double psi = complementary(phi, std::abs(y));
  if (!std::isfinite(psi)) return kInf;
  return phi(x) + psi - std::abs(x) * std::abs(y);
}

YoungCheck check_young(const YoungFunction& phi, const std::vector<double>& grid) {
  YoungCheck c;
  c.zero_at_zero = phi(0.0) == 0;
  c.even = true;
  c.convexity_margin = kInf;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid[i];
    if (phi(-x) != phi(x)) c.even = false;
    if (i + 1 < grid.size()) {
      const double a = phi(x), b = phi(grid[i + 1]), m = phi((x + grid[i + 1]) / 2);
      if (!std::isfinite(a) || !std::isfinite(b)) continue;
      const double margin = ((a + b) / 2 - m) / std::max(1.0, std::abs(m));
      c.convexity_margin = std::min(c.convexity_margin, margin);
    }
  }
  c.convex = c.convexity_margin >= -1e-12;
  const double last = phi(grid.back());
  c.grows = last > phi(grid.front()) && last >= 1e3;
  return c;
}

}  // namespace orlab
