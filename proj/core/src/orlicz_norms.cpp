// SPDX-License-Identifier: Apache-2.0
#include "orlab/orlicz_norms.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <boost/math/tools/minima.hpp>

#include "orlab/error.hpp"
#include "orlab/numeric.hpp"

namespace orlab {

namespace {

void require_solvable(const YoungFunction& phi) {
  if (!phi.finite())
    throw UnsupportedYoungError("norm solvers need a finite-valued Young function, got " + phi.name());
}

double modular(std::span<const double> v, double m, const YoungFunction& phi, double scale) {
  CompensatedSum s;
  for (double x : v) s += phi(x * scale);
  return m * s.value();
}

struct Amemiya {
  double value = 0;
  double k = 0;
};

Amemiya amemiya(std::span<const double> v, double m, const YoungFunction& phi) {
  const double lux = luxemburg_norm(v, m, phi);
  if (lux == 0) return {0, 0};
  auto A = [&](double t) {
    const double k = std::exp(t);
    return (1 + modular(v, m, phi, k)) / k;
  };
  // The minimizer k* satisfies 1/k* <= min A <= 2 N, so t* >= t0 - log 2.
  const double t0 = -std::log(lux);
  double prev = A(t0), t = t0, step = 1, hi = t0 + 1;
  for (;;) {
    const double tn = t + step;
    const double an = A(tn);
    if (!(an < prev)) {
      hi = tn;
      break;
    }
    t = tn;
    prev = an;
    step *= 2;
    // Still decreasing at k = e^700: the infimum is the limit k -> infinity.
    if (tn > 700) return {prev, std::exp(tn)};
  }
  std::uintmax_t iters = 500;
  const auto [tm, am] =
      boost::math::tools::brent_find_minima(A, t0 - 1, hi, std::numeric_limits<double>::digits / 2, iters);
  if (prev < am) return {prev, std::exp(t)};
  return {am, std::exp(tm)};
}

}  // namespace

double l1_norm(std::span<const double> v, double m) {
  CompensatedSum s;
  for (double x : v) s += std::abs(x);
  return m * s.value();
}

double luxemburg_norm(std::span<const double> v, double m, const YoungFunction& phi) {
  require_solvable(phi);
  double top = 0;
  for (double x : v) top = std::max(top, std::abs(x));
  if (top == 0) return 0;
  auto F = [&](double k) { return modular(v, m, phi, 1 / k); };
  double hi = top;
  while (F(hi) > 1) hi *= 2;
  double lo = hi;
  while (F(lo) <= 1) {
    lo /= 2;
    if (lo < 1e-300) return hi;
  }
  while (hi - lo > kLuxemburgTol * hi) {
    const double mid = std::sqrt(lo * hi);
    if (mid <= lo || mid >= hi) break;
    (F(mid) > 1 ? lo : hi) = mid;
  }
  return hi;
}

double orlicz_norm(std::span<const double> v, double m, const YoungFunction& phi) {
  require_solvable(phi);
  return amemiya(v, m, phi).value;
}

std::vector<double> weighted_magnitudes(const FinSuppFun& f, const Weight* omega) {
  std::vector<double> v;
  v.reserve(f.size());
  for (const auto& [x, c] : f) v.push_back(omega ? std::abs(c) * (*omega)(x) : std::abs(c));
  return v;
}

double l1_norm(const FinSuppFun& f, const Weight* omega) {
  return l1_norm(weighted_magnitudes(f, omega), f.chain().point_mass());
}

double luxemburg_norm(const FinSuppFun& f, const YoungFunction& phi, const Weight* omega) {
  return luxemburg_norm(weighted_magnitudes(f, omega), f.chain().point_mass(), phi);
}

double orlicz_norm(const FinSuppFun& f, const YoungFunction& phi, const Weight* omega) {
  return orlicz_norm(weighted_magnitudes(f, omega), f.chain().point_mass(), phi);
}

std::string NormSpec::tag() const {
  const std::string w = weight ? weight->name() : "";
  switch (kind) {
    case NormKind::l1:
      return "L1";
    case NormKind::weighted_l1:
      return "L1(" + w + ")";
    case NormKind::luxemburg:
      return "lux(" + young->name() + (w.empty() ? "" : ";" + w) + ")";
    case NormKind::orlicz:
      return "orlicz(" + young->name() + (w.empty() ? "" : ";" + w) + ")";
  }
  return "?";
}

double norm(const FinSuppFun& f, const NormSpec& spec) {
  const Weight* w = spec.weight.get();
  switch (spec.kind) {
    case NormKind::l1:
      return l1_norm(f);
    case NormKind::weighted_l1:
      if (!w) throw ValidationError("weighted L1 norm without a weight");
      return l1_norm(f, w);
    case NormKind::luxemburg:
    case NormKind::orlicz:
      if (!spec.young) throw ValidationError("Orlicz-type norm without a Young function");
      return spec.kind == NormKind::luxemburg ? luxemburg_norm(f, *spec.young, w) : orlicz_norm(f, *spec.young, w);
  }
  throw ValidationError("unknown norm kind");
}

std::pair<double, double> holder_sides(const FinSuppFun& f, const FinSuppFun& g, const YoungFunction& phi) {
  if (!(f.chain() == g.chain())) throw ChainMismatchError("holder_sides: different chains");
  const YoungFunction psi = complement_of(phi);
  CompensatedSum s;
  auto a = f.begin(), b = g.begin();
  while (a != f.end() && b != g.end()) {
    if (a->first < b->first) ++a;
    else if (b->first < a->first) ++b;
    else {
      s += std::abs(a->second) * std::abs(b->second);
      ++a;
      ++b;
    }
  }
  const double left = f.chain().point_mass() * s.value();
  const double of = orlicz_norm(f, phi);
  if (of == 0) return {left, 0.0};
  const double lg = luxemburg_norm(g, psi);
  return {left, of * lg};
}

double orlicz_dual_sup(const FinSuppFun& f, const YoungFunction& phi, std::uint64_t seed, std::size_t samples) {
  require_solvable(phi);
  const YoungFunction psi = complement_of(phi);
  const auto v = weighted_magnitudes(f);
  const double m = f.chain().point_mass();
  if (v.empty()) return 0;
  auto pair_value = [&](std::vector<double> g) {
    const double n = luxemburg_norm(g, m, psi);
    if (n == 0) return 0.0;
    CompensatedSum s;
    for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * g[i] / n;
    return m * s.value();
  };
  double best = 0;
  const auto opt = amemiya(v, m, phi);
  if (opt.k > 0 && std::isfinite(opt.k)) {
    std::vector<double> g(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      const double x = opt.k * v[i];
      const double h = 1e-6 * std::max(x, 1e-6);
      g[i] = std::max(0.0, (phi(x + h) - phi(std::max(0.0, x - h))) / (x + h - std::max(0.0, x - h)));
    }
    best = std::max(best, pair_value(g));
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0, 1);
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<double> g(v.size());
    for (auto& x : g) x = u(rng);
    best = std::max(best, pair_value(std::move(g)));
  }
  return best;
}

}  // namespace orlab
