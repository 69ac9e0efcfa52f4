// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace orlab {

enum class YoungKind {
  p_power,
  exp_minus,
  exp_minus_dual,
  cosh,
  cosh_dual,
  xlog,
  custom,
};

/// Convex even function Phi with Phi(0) = 0, evaluated through |x|.
class YoungFunction {
 public:
  using Evaluator = std::function<double(double)>;

  /// |x|^p / p, p >= 1. For p = 1 the complement is 0 on [0,1] and infinite beyond.
  static YoungFunction p_power(double p);
  /// e^|x| - |x| - 1.
  static YoungFunction exp_minus();
  /// (1+|x|) log(1+|x|) - |x|, the complement of exp_minus().
  static YoungFunction exp_minus_dual();
  /// cosh(x) - 1.
  static YoungFunction cosh_minus_one();
  /// |x| asinh|x| - sqrt(1+x^2) + 1, the complement of cosh_minus_one().
  static YoungFunction cosh_dual();
  /// |x| log(1+|x|). No closed-form complement.
  static YoungFunction xlog();
  static YoungFunction custom(std::string name, Evaluator phi, bool finite = true);

  double operator()(double x) const;

  const std::string& name() const { return name_; }
  YoungKind kind() const { return kind_; }
  /// Exponent of p_power (0 otherwise).
  double exponent() const { return p_; }
  /// False when Phi takes the value infinity somewhere.
  bool finite() const { return finite_; }
  bool has_closed_complement() const;
  /// Registered Delta2 status of catalog functions, if known.
  std::optional<bool> known_delta2() const;

 private:
  YoungFunction(YoungKind kind, std::string name, Evaluator phi, bool finite, double p);

  YoungKind kind_;
  std::string name_;
  Evaluator phi_;
  bool finite_;
  double p_ = 0;
};

enum class ComplementMethod { automatic, numeric };

/// Psi(y) = sup_{x >= 0} (x y - Phi(x)); +infinity when unbounded.
double complementary(const YoungFunction& phi, double y, ComplementMethod method = ComplementMethod::automatic);

/// Psi as a YoungFunction: the closed-form partner when registered, else a
/// numerically evaluated one.
YoungFunction complement_of(const YoungFunction& phi);

struct Delta2Result {
  /// True when the ratio stayed bounded and settled near the right end.
  bool bounded = false;
  /// sup of Phi(2x)/Phi(x) over the grid (infinite on overflow).
  double constant = 0;
  std::vector<double> grid;
  std::vector<double> ratios;
  bool heuristic = true;
};

/// n log-spaced points on [lo, hi].
std::vector<double> log_grid(double lo = 1e-6, double hi = 1e6, std::size_t n = 241);

Delta2Result delta2_constant(const YoungFunction& phi, const std::vector<double>& grid = log_grid());

/// Phi(x) + Psi(y) - x y (>= 0 up to rounding).
double young_inequality_margin(const YoungFunction& phi, double x, double y);

struct YoungCheck {
  bool zero_at_zero = false;
  bool even = false;
  /// min over the grid of (Phi(a)+Phi(b))/2 - Phi((a+b)/2), relative.
  double convexity_margin = 0;
  bool convex = false;
  bool grows = false;
};

YoungCheck check_young(const YoungFunction& phi, const std::vector<double>& grid = log_grid());

}  // namespace orlab
