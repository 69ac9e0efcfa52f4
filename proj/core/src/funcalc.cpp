// SPDX-License-Identifier: Apache-2.0
#include "orlab/funcalc.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/zeta.hpp>
#include <unsupported/Eigen/FFT>

#include "orlab/error.hpp"
#include "orlab/numeric.hpp"

namespace orlab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kStoredEnvelope = 1e-20;
constexpr double kDirectSincCutoff = 0.01;

// Coefficient envelope of the plateau construction:
// |phi^(n)| <= (1/(pi n)) prod_{k <= K(n)} 1/(n a_k), a_k = c k^{-s},
// K(n) = #{k : n a_k >= 1}.
struct PlateauEnvelope {
  double c = 0;
  double s = 0;
  double beta = 0;
  double gamma = 0;

  std::int64_t count(double n) const {
    const double x = c * n;
    auto K = static_cast<std::int64_t>(std::floor(std::pow(x, beta)));
    while (std::pow(static_cast<double>(K + 1), s) <= x) ++K;
    while (K > 0 && std::pow(static_cast<double>(K), s) > x) --K;
    return K;
  }

  double log_env(double n) const {
    const auto K = static_cast<double>(count(n));
    return -std::log(kPi * n) - K * std::log(n * c) + s * std::lgamma(K + 1);
  }

  // Past H the Stirling form of log_env(n) + w n^gamma stays below
  // -(s/2)(cn)^beta, and that margin only grows with n.
  bool remainder_regime(double n, double w) const {
    if (c * n < 1) return false;
    const double cb = std::pow(c * n, beta);
    const bool growing = 0.5 * std::pow(c, beta) * std::pow(n, beta) >= w * gamma * std::pow(n, gamma);
    const double bracket = s - std::log(kPi * n) + s / 2 * std::log(2 * kPi * cb) + s / 12 + w * std::pow(n, gamma);
    return growing && bracket <= s / 2 * cb;
  }

  struct Tail {
    double explicit_part = 0;
    double remainder = 0;
  };

  // Bound on sum_{|n| > N} env(n) e^{w |n|^gamma}. The horizon grows until the
  // closed-form remainder is below 1e-6 of the explicit part.
  Tail tail(std::int64_t N, double w) const {
    double H = static_cast<double>(std::max<std::int64_t>(N + 1, 1));
    while (!remainder_regime(H, w)) {
      H *= 2;
      if (H > 1e10) throw NumericError("plateau: envelope tail horizon out of reach");
    }
    const double a = s / 2 * std::pow(c, beta);
    auto integral = [&](double h) {
      return std::pow(a, -1 / beta) / beta * boost::math::tgamma(1 / beta, a * std::pow(h, beta));
    };
    CompensatedSum sum;
    std::int64_t next = N + 1;
    for (;;) {
      const auto top = static_cast<std::int64_t>(H);
      for (; next <= top; ++next) {
        const double x = static_cast<double>(next);
        sum += std::exp(log_env(x) + w * std::pow(x, gamma));
      }
      const double rem = integral(H);
      if (rem <= 1e-6 * sum.value() || rem == 0) break;
      H *= 2;
      if (H > 1e10) throw NumericError("plateau: envelope tail horizon out of reach");
    }
    return {2 * sum.value(), 2 * integral(H)};
  }
};

std::int64_t index_of(std::int64_t n, std::int64_t range) { return n + range; }

}  // namespace

AGammaFunction AGammaFunction::zero(double gamma) {
  AGammaFunction f;
  f.gamma_ = gamma;
  f.coef_ = {Complex(0)};
  f.envelope_ = [](std::int64_t) { return 0.0; };
  f.description_ = "zero";
  return f;
}

AGammaFunction AGammaFunction::plateau(double p, double q, double eps, double gamma) {
  if (!(gamma > std::log2(4.0 / 3.0) && gamma < 1))
    throw ValidationError("plateau: gamma must lie in (log2(4/3), 1)");
  if (!(eps > 0) || !(p > 0) || !(p + eps < q - eps) || !(q < 2 * kPi))
    throw ValidationError("plateau: need eps > 0 and 0 < p, p + eps < q - eps, q < 2 pi");

  PlateauEnvelope env;
  env.gamma = gamma;
  env.beta = (1 + gamma) / 2;
  env.s = 1 / env.beta;
  env.c = eps / (4 * boost::math::zeta(env.s));
  const double alpha = p + eps / 2;
  const double omega = q - eps / 2;

  std::int64_t R = 64;
  while (env.log_env(static_cast<double>(R)) >= std::log(kStoredEnvelope)) ++R;

  // Partial sums of k^{-2s} and k^{-4s} for the small-argument tail of the sinc product.
  const auto kmax = static_cast<std::size_t>(
      std::ceil(std::pow(static_cast<double>(R) * env.c / kDirectSincCutoff, env.beta))) + 2;
  std::vector<double> h2(kmax + 1, 0.0), h4(kmax + 1, 0.0);
  for (std::size_t k = 1; k <= kmax; ++k) {
    const double kk = static_cast<double>(k);
    h2[k] = h2[k - 1] + std::pow(kk, -2 * env.s);
    h4[k] = h4[k - 1] + std::pow(kk, -4 * env.s);
  }
  const double z2 = boost::math::zeta(2 * env.s);
  const double z4 = boost::math::zeta(4 * env.s);

  AGammaFunction f;
  f.gamma_ = gamma;
  f.range_ = R;
  f.coef_.assign(static_cast<std::size_t>(2 * R + 1), Complex(0));
  f.coef_[static_cast<std::size_t>(R)] = (omega - alpha) / (2 * kPi);
  for (std::int64_t n = 1; n <= R; ++n) {
    const double x = static_cast<double>(n);
    double prod = 1;
    std::size_t k = 1;
    for (;; ++k) {
      const double arg = x * env.c * std::pow(static_cast<double>(k), -env.s);
      if (arg < kDirectSincCutoff) break;
      prod *= std::sin(arg) / arg;
    }
    const std::size_t done = k - 1;
    const double nc2 = x * x * env.c * env.c;
    const double log_tail = -nc2 * (z2 - h2[done]) / 6 - nc2 * nc2 * (z4 - h4[done]) / 180;
    prod *= std::exp(log_tail);
    const Complex ind = (std::polar(1.0, -x * alpha) - std::polar(1.0, -x * omega)) / Complex(0, 2 * kPi * x);
    const Complex v = ind * prod;
    f.coef_[static_cast<std::size_t>(R + n)] = v;
    f.coef_[static_cast<std::size_t>(R - n)] = std::conj(v);
  }
  f.envelope_ = [env](std::int64_t n) {
    return n == 0 ? 1.0 : std::exp(env.log_env(static_cast<double>(n < 0 ? -n : n)));
  };
  const auto plain = env.tail(R, 0);
  f.truncation_l1_ = plain.explicit_part + plain.remainder;

  CompensatedSum ws;
  for (std::int64_t n = -R; n <= R; ++n)
    ws += std::abs(f.coef_[static_cast<std::size_t>(n + R)]) * std::exp(2 * std::pow(std::abs(static_cast<double>(n)), gamma));
  f.weighted_stored_ = ws.value();
  const auto weighted = env.tail(R, 2);
  f.weighted_envelope_ = weighted.explicit_part;
  f.weighted_remainder_ = weighted.remainder;

  std::ostringstream d;
  d << "plateau(p=" << p << ",q=" << q << ",eps=" << eps << ",gamma=" << gamma << ")";
  f.description_ = d.str();
  return f;
}

Complex AGammaFunction::coefficient(std::int64_t n) const {
  if (n < -range_ || n > range_) return 0;
  return coef_[static_cast<std::size_t>(index_of(n, range_))];
}

double AGammaFunction::envelope(std::int64_t n) const { return envelope_(n); }

double AGammaFunction::tail_l1(std::int64_t N) const {
  CompensatedSum s;
  for (std::int64_t n = std::max<std::int64_t>(N + 1, 0); n <= range_; ++n) {
    if (n == 0) continue;
    s += std::abs(coefficient(n)) + std::abs(coefficient(-n));
  }
  if (N < 0) s += std::abs(coefficient(0));
  return s.value() + truncation_l1_;
}

double AGammaFunction::coefficient_l1() const { return tail_l1(-1); }

std::vector<double> AGammaFunction::weighted_block_sums() const {
  std::vector<double> out;
  for (std::int64_t start = 0; start <= range_; start += 64) {
    double s = 0;
    for (std::int64_t n = start; n < std::min(start + 64, range_ + 1); ++n) {
      const double w = std::exp(2 * std::pow(static_cast<double>(n), gamma_));
      s += std::abs(coefficient(n)) * w;
      if (n != 0) s += std::abs(coefficient(-n)) * w;
    }
    out.push_back(s);
  }
  return out;
}

Complex AGammaFunction::operator()(double x) const {
  Complex s = coefficient(0);
  for (std::int64_t n = 1; n <= range_; ++n) {
    const Complex e = std::polar(1.0, static_cast<double>(n) * x);
    s += coefficient(n) * e + coefficient(-n) * std::conj(e);
  }
  return s;
}

std::vector<Complex> AGammaFunction::grid_values(std::size_t M) const {
  if (M < static_cast<std::size_t>(2 * range_ + 1) || (M & (M - 1)) != 0)
    throw ValidationError("grid_values: M must be a power of two >= 2 range + 1");
  std::vector<Complex> spectrum(M, Complex(0)), values;
  for (std::int64_t n = -range_; n <= range_; ++n) {
    const auto idx = static_cast<std::size_t>((n + static_cast<std::int64_t>(M)) % static_cast<std::int64_t>(M));
    spectrum[idx] = coefficient(n);
  }
  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::Unscaled);
  fft.inv(values, spectrum);
  return values;
}

AGammaFunction pointwise_product(const AGammaFunction& phi, const AGammaFunction& psi) {
  if (phi.gamma_ != psi.gamma_) throw ValidationError("pointwise_product: gamma mismatch");
  AGammaFunction out;
  out.gamma_ = phi.gamma_;
  const std::int64_t R1 = phi.range_, R2 = psi.range_;
  out.range_ = R1 + R2;
  out.coef_.assign(static_cast<std::size_t>(2 * out.range_ + 1), Complex(0));
  for (std::int64_t k = -R1; k <= R1; ++k) {
    const Complex a = phi.coefficient(k);
    if (a == Complex(0)) continue;
    for (std::int64_t j = -R2; j <= R2; ++j)
      out.coef_[static_cast<std::size_t>(k + j + out.range_)] += a * psi.coefficient(j);
  }
  const double A1 = phi.coefficient_l1(), A2 = psi.coefficient_l1();
  // Every omitted pair (k, j) has |k| > R1 or |j| > R2.
  out.truncation_l1_ = phi.truncation_l1_ * A2 + A1 * psi.truncation_l1_;

  auto sup_beyond = [](const AGammaFunction& f, std::int64_t k) {
    double m = f.envelope(std::max(k, f.range_ + 1));
    for (std::int64_t n = k; n <= f.range_; ++n) m = std::max({m, std::abs(f.coefficient(n)), std::abs(f.coefficient(-n))});
    return m;
  };
  auto p1 = std::make_shared<AGammaFunction>(phi);
  auto p2 = std::make_shared<AGammaFunction>(psi);
  out.envelope_ = [p1, p2, A1, A2, sup_beyond](std::int64_t n) {
    const std::int64_t half = ((n < 0 ? -n : n) + 1) / 2;
    return A2 * sup_beyond(*p1, half) + A1 * sup_beyond(*p2, half);
  };

  CompensatedSum ws;
  for (std::int64_t n = -out.range_; n <= out.range_; ++n)
    ws += std::abs(out.coefficient(n)) * std::exp(2 * std::pow(std::abs(static_cast<double>(n)), out.gamma_));
  out.weighted_stored_ = ws.value();
  // omega_gamma is sub-multiplicative, so the full norm is at most the product of norms.
  out.weighted_remainder_ = std::max(0.0, phi.weighted_norm() * psi.weighted_norm() - out.weighted_stored_);
  out.description_ = "(" + phi.description_ + ")*(" + psi.description_ + ")";
  return out;
}

PlateauProfile plateau_profile(const AGammaFunction& phi, double p, double q, double eps, std::size_t M) {
  std::size_t size = M;
  while (size < static_cast<std::size_t>(2 * phi.range() + 1)) size *= 2;
  const auto values = phi.grid_values(size);
  PlateauProfile prof;
  prof.points = size;
  prof.min_value = std::numeric_limits<double>::infinity();
  prof.max_value = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < size; ++j) {
    const double x = 2 * kPi * static_cast<double>(j) / static_cast<double>(size);
    const double v = values[j].real();
    prof.max_imag = std::max(prof.max_imag, std::abs(values[j].imag()));
    prof.min_value = std::min(prof.min_value, v);
    prof.max_value = std::max(prof.max_value, v);
    if (x >= p + eps && x <= q - eps) prof.max_dev_inside = std::max(prof.max_dev_inside, std::abs(v - 1));
    if (x < p || x > q) prof.max_abs_outside = std::max(prof.max_abs_outside, std::abs(v));
  }
  prof.ok = prof.max_dev_inside <= 1e-6 && prof.max_abs_outside <= 1e-6 && prof.min_value >= -1e-6 &&
            prof.max_value <= 1 + 1e-6;
  return prof;
}

namespace {

void require_self_adjoint(const FinSuppFun& f, const char* what) {
  double m = 0;
  for (const auto& e : f) m = std::max(m, std::abs(e.second));
  if (!is_self_adjoint(f, 1e-13 * m)) throw ValidationError(std::string(what) + ": f must be self-adjoint");
}

}  // namespace

CalculusResult apply_series(const AGammaFunction& phi, const FinSuppFun& f, double tol) {
  if (!(tol > 0)) throw ValidationError("apply_series: tol must be > 0");
  require_self_adjoint(f, "apply_series");
  const auto& chain = f.chain();
  const double B = unitary_bound(f, NormSpec::l1());
  const std::int64_t R = phi.range();
  std::vector<double> suffix(static_cast<std::size_t>(R + 1), 0.0);
  for (std::int64_t n = R - 1; n >= 0; --n)
    suffix[static_cast<std::size_t>(n)] = suffix[static_cast<std::size_t>(n + 1)] +
                                          std::abs(phi.coefficient(n + 1)) + std::abs(phi.coefficient(-n - 1));
  std::int64_t N = -1;
  for (std::int64_t n = 0; n <= R; ++n)
    if (B * (suffix[static_cast<std::size_t>(n)] + phi.truncation_l1()) < tol) {
      N = n;
      break;
    }
  if (N < 0) throw NumericError("apply_series: coefficient tail cannot meet tol");

  // exp(inf) = exp(if)^{*n}; exp(-inf) = exp(inf)* for self-adjoint f.
  const FinSuppFun unit = FinSuppFun::unit(chain);
  const FinSuppFun e1 = u_exact(f, Complex(0, 1)) + unit;
  FinSuppFun acc(chain);
  Complex coef_sum = 0;
  FinSuppFun en = unit;
  for (std::int64_t n = 1; n <= N; ++n) {
    en = convolve(en, e1);
    acc += en * phi.coefficient(n);
    acc += involution(en) * phi.coefficient(-n);
    coef_sum += phi.coefficient(n) + phi.coefficient(-n);
  }
  acc -= unit * coef_sum;
  return {std::move(acc), B * (suffix[static_cast<std::size_t>(N)] + phi.truncation_l1()), N};
}

Matrix matrix_function(const AGammaFunction& phi, const Matrix& hermitian) {
  const auto es = hermitian_eigen(hermitian, true);
  const Complex at_zero = phi(0.0);
  Eigen::VectorXcd d(es.values.size());
  for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = phi(es.values(i)) - at_zero;
  return es.vectors * d.asDiagonal() * es.vectors.adjoint();
}

FinSuppFun apply_spectral(const AGammaFunction& phi, const FinSuppFun& f) {
  require_self_adjoint(f, "apply_spectral");
  RegRepMatrix rep = regular_rep(f);
  rep.matrix = matrix_function(phi, rep.matrix);
  return pullback(f.chain(), rep);
}

ApproxIdentityTable approx_identity_convergence(const AGammaFunction& phi, const NormSpec& norm_spec,
                                                const FinSuppFun& g) {
  if (std::abs(phi(1.0) - 1.0) > 1e-6) throw ValidationError("approx_identity_convergence: phi(1) must be 1");
  const auto& chain = g.chain();
  ApproxIdentityTable table;
  auto row = [&](std::size_t level, const FinSuppFun& fj) {
    const FinSuppFun pf = apply_spectral(phi, fj);
    table.rows.push_back({level, norm(convolve(pf, g) - g, norm_spec)});
  };
  for (std::size_t j = chain.levels(); j >= 1; --j) {
    if (!chain.enumerable(j) || chain.order(j) > 2048) continue;
    const double mu = chain.measure(j).convert_to<double>();
    row(j, FinSuppFun::indicator(chain, j) * Complex(1 / mu));
  }
  row(0, FinSuppFun::unit(chain));
  table.exact_at_unit = table.rows.back().value <= 1e-8;
  table.monotone = true;
  for (std::size_t i = 1; i < table.rows.size(); ++i)
    if (table.rows[i].value > table.rows[i - 1].value + 1e-9) table.monotone = false;
  return table;
}

}  // namespace orlab
