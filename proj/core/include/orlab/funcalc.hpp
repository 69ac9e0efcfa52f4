// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "orlab/convalg.hpp"
#include "orlab/function.hpp"
#include "orlab/orlicz_norms.hpp"

namespace orlab {

/// 2 pi-periodic function given by Fourier coefficients phi^(n), stored for
/// |n| <= range(), with a certified l^1 bound on everything not stored.
class AGammaFunction {
 public:
  using Envelope = std::function<double(std::int64_t)>;

  /// Indicator of [p + eps/2, q - eps/2] convolved with normalized boxes of
  /// half-widths c k^{-s}, s = 2/(1+gamma), sum of widths eps/2.
  static AGammaFunction plateau(double p, double q, double eps, double gamma);
  static AGammaFunction zero(double gamma);

  double gamma() const { return gamma_; }
  std::int64_t range() const { return range_; }
  Complex coefficient(std::int64_t n) const;
  /// Bound on |phi^(n)| for |n| > range().
  double envelope(std::int64_t n) const;
  /// sum |exact - stored| over all n.
  double truncation_l1() const { return truncation_l1_; }
  /// Bound on sum_{|n| > N} |phi^(n)|.
  double tail_l1(std::int64_t N) const;
  /// Bound on sum_n |phi^(n)|.
  double coefficient_l1() const;

  /// Upper bound on sum |phi^(n)| e^{2|n|^gamma}.
  double weighted_norm() const { return weighted_stored_ + weighted_envelope_ + weighted_remainder_; }
  double weighted_stored() const { return weighted_stored_; }
  /// Envelope contribution beyond the stored range up to the summation horizon.
  double weighted_envelope() const { return weighted_envelope_; }
  /// Closed-form bound beyond the horizon.
  double weighted_remainder() const { return weighted_remainder_; }
  /// Block sums of |phi^(n)| e^{2|n|^gamma} over the stored range (blocks of 64).
  std::vector<double> weighted_block_sums() const;

  /// sum_{|n| <= range} phi^(n) e^{inx}.
  Complex operator()(double x) const;
  /// Values at 2 pi j / M, j = 0 .. M-1, M a power of two >= 2 range + 1.
  std::vector<Complex> grid_values(std::size_t M) const;

  const std::string& description() const { return description_; }

  friend AGammaFunction pointwise_product(const AGammaFunction& phi, const AGammaFunction& psi);

 private:
  AGammaFunction() = default;

  double gamma_ = 0.5;
  std::int64_t range_ = 0;
  std::vector<Complex> coef_;
  Envelope envelope_;
  double truncation_l1_ = 0;
  double weighted_stored_ = 0;
  double weighted_envelope_ = 0;
  double weighted_remainder_ = 0;
  std::string description_;
};

/// Coefficient convolution over the stored ranges.
AGammaFunction pointwise_product(const AGammaFunction& phi, const AGammaFunction& psi);

struct PlateauProfile {
  std::size_t points = 0;
  /// max |phi - 1| on [p + eps, q - eps].
  double max_dev_inside = 0;
  /// max |phi| outside [p, q].
  double max_abs_outside = 0;
  double min_value = 0;
  double max_value = 0;
  double max_imag = 0;
  bool ok = false;
};

PlateauProfile plateau_profile(const AGammaFunction& phi, double p, double q, double eps, std::size_t M = 1 << 14);

struct CalculusResult {
  FinSuppFun value;
  /// Certified L^1 bound on the omitted terms.
  double tail_bound = 0;
  /// Terms |n| <= N were summed.
  std::int64_t N = 0;
};

/// sum_{|n| <= N} phi^(n) u(inf), N the first index with B_K tail_l1(N) < tol.
CalculusResult apply_series(const AGammaFunction& phi, const FinSuppFun& f, double tol);
/// Pullback of phi(A) - phi(0) I, A = regular_rep(f) Hermitian.
FinSuppFun apply_spectral(const AGammaFunction& phi, const FinSuppFun& f);
/// phi(A) - phi(0) I for Hermitian A.
Matrix matrix_function(const AGammaFunction& phi, const Matrix& hermitian);

struct ApproxIdentityRow {
  /// Level j of f_j = chi_{K_j} / mu(K_j); 0 stands for f = delta_e / m.
  std::size_t level = 0;
  double value = 0;
};

struct ApproxIdentityTable {
  std::vector<ApproxIdentityRow> rows;
  /// Value at the unit is <= 1e-8.
  bool exact_at_unit = false;
  /// Values non-increasing (within 1e-9) along the family.
  bool monotone = false;
};

/// ||phi{f_j} * g - g|| for f_j from chi_{K_L}/mu(K_L) down to delta_e/m.
ApproxIdentityTable approx_identity_convergence(const AGammaFunction& phi, const NormSpec& norm, const FinSuppFun& g);

}  // namespace orlab
