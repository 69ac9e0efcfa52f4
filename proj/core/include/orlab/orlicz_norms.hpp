// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orlab/function.hpp"
#include "orlab/weights.hpp"
#include "orlab/young.hpp"

namespace orlab {

/// Relative tolerance of the Luxemburg bisection.
inline constexpr double kLuxemburgTol = 1e-12;

/// Norms of m-weighted magnitude vectors: the integral of h over a discrete
/// chain is m * sum h(v_i).
double l1_norm(std::span<const double> v, double m);
double luxemburg_norm(std::span<const double> v, double m, const YoungFunction& phi);
/// Amemiya form inf_{k > 0} (1 + m sum Phi(k v_i)) / k.
double orlicz_norm(std::span<const double> v, double m, const YoungFunction& phi);

/// |f(x)| omega(x) over the support of f, in element order.
std::vector<double> weighted_magnitudes(const FinSuppFun& f, const Weight* omega = nullptr);

double l1_norm(const FinSuppFun& f, const Weight* omega = nullptr);
double luxemburg_norm(const FinSuppFun& f, const YoungFunction& phi, const Weight* omega = nullptr);
double orlicz_norm(const FinSuppFun& f, const YoungFunction& phi, const Weight* omega = nullptr);

enum class NormKind { l1, weighted_l1, luxemburg, orlicz };

/// A norm on C_c(G): L^1, L^1(omega), or the Luxemburg / Orlicz norm of f omega.
struct NormSpec {
  NormKind kind = NormKind::l1;
  std::optional<YoungFunction> young;
  std::shared_ptr<const Weight> weight;

  static NormSpec l1() { return {}; }
  static NormSpec weighted_l1(std::shared_ptr<const Weight> w) { return {NormKind::weighted_l1, std::nullopt, std::move(w)}; }
  static NormSpec luxemburg(YoungFunction phi, std::shared_ptr<const Weight> w = nullptr) {
    return {NormKind::luxemburg, std::move(phi), std::move(w)};
  }
  static NormSpec orlicz(YoungFunction phi, std::shared_ptr<const Weight> w = nullptr) {
    return {NormKind::orlicz, std::move(phi), std::move(w)};
  }

  std::string tag() const;
};

double norm(const FinSuppFun& f, const NormSpec& spec);

/// (m sum |f g|, orlicz_norm(f, Phi) * luxemburg_norm(g, Psi)).
std::pair<double, double> holder_sides(const FinSuppFun& f, const FinSuppFun& g, const YoungFunction& phi);

/// Lower estimate of the defining sup of the Orlicz norm: the best value of
/// m sum |f g| over sampled g on the support of f scaled onto the Psi unit
/// ball, plus the candidate g = Phi'(k* |f|) from the Amemiya minimizer.
double orlicz_dual_sup(const FinSuppFun& f, const YoungFunction& phi, std::uint64_t seed, std::size_t samples);

}  // namespace orlab
