// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "orlab/group_chain.hpp"

namespace orlab {

/// Closed-form bound on the partial sums mu(K_1)/a_1^q + sum_{i=2}^L mu(shell_i)/a_i^q.
struct LqCertificate {
  double q = 1;
  std::function<double(std::size_t)> bound_upto;
  /// Limit of bound_upto as L -> infinity.
  double limit = 0;
  std::string description;
};

/// omega: G -> [1, infinity), radial (constant on the shells K_i \ K_{i-1})
/// or pointwise. Lives on a GroupChain or, when radial, on a ShellModel.
class Weight {
 public:
  using Pointwise = std::function<double(Element)>;

  static Weight trivial(const GroupChain& chain);
  /// a[i-1] on shell i. a non-decreasing, a_i >= 1, one value per level.
  static Weight radial(const GroupChain& chain, std::vector<double> a, std::string name = "radial");
  static Weight radial(const ShellModel& model, std::vector<double> a, std::string name = "radial");
  /// Enumerable levels are tabulated once at construction.
  static Weight pointwise(const GroupChain& chain, Pointwise omega, std::string name);

  double operator()(Element x) const;

  const std::string& name() const { return name_; }
  bool is_radial() const { return radial_; }
  /// Shell values a_1, a_2, ... (radial weights only).
  const std::vector<double>& shell_values() const;
  std::size_t levels() const;
  bool on_chain() const { return chain_.has_value(); }
  const GroupChain& chain() const;
  const ShellModel& shell_model() const;
  /// mu(K_1), mu(K_2 \ K_1), ... of the underlying model.
  std::vector<double> shell_measures() const;

  /// max-form constant C with omega(xy) <= C max(omega(x), omega(y)), when known.
  std::optional<double> subadditive_max_form() const { return max_form_; }
  /// Values obtained by sampling instead of exhaustive suprema.
  bool heuristic() const { return heuristic_; }
  /// Built on a chain whose indices are not non-decreasing.
  bool nonstandard_warning() const { return nonstandard_; }
  const std::optional<LqCertificate>& lq_certificate() const { return lq_; }

  Weight with_certificate(LqCertificate c) const;
  Weight with_flags(bool heuristic, bool nonstandard) const;
  Weight renamed(std::string name) const;

  /// Radial weight without the monotonicity check (constructions whose
  /// values may decrease on non-standard chains).
  static Weight radial_unchecked(const GroupChain& chain, std::vector<double> a, std::string name);
  static Weight radial_unchecked(const ShellModel& model, std::vector<double> a, std::string name);

 private:
  Weight() = default;

  std::string name_;
  bool radial_ = false;
  std::vector<double> a_;
  Pointwise pointwise_;
  std::shared_ptr<const std::vector<double>> table_;
  std::optional<GroupChain> chain_;
  std::optional<ShellModel> shells_;
  std::optional<double> max_form_;
  bool heuristic_ = false;
  bool nonstandard_ = false;
  std::optional<LqCertificate> lq_;
};

/// Number of samples used for suprema over non-enumerable levels.
inline constexpr std::size_t kSupSamples = 10000;

/// sup of omega over K_level (sampled, seed fixed, on non-enumerable levels).
double level_sup(const Weight& omega, std::size_t level, bool* sampled = nullptr);
double level_inf(const Weight& omega, std::size_t level, bool* sampled = nullptr);

/// omega^sharp: a_i = sup over K_i, radial.
Weight sharpen(const Weight& omega);
/// omega^sharp_p: (a_1 + 1) on K_1, (a_i + i^2) mu(shell_i)^{1/q} on shell i.
Weight sharpen_p(const Weight& omega, double p);
/// q = p/(p-1) for p > 1 and q = 1 for p = 1.
double conjugate_exponent(double p);

/// sup_{i <= upto} (max over K_i - min over K_i).
double variation(const Weight& omega, std::size_t upto);

struct GrsSequence {
  std::vector<double> values;
  /// max of omega over the cyclic group generated by x.
  double cyclic_sup = 1;
  std::uint64_t order = 1;
  /// Every value lies in [1, C^{1/n}].
  bool contained = true;
};

/// (omega(x^n)^{1/n})_{n=1..N}.
GrsSequence grs_sequence(const Weight& omega, Element x, std::size_t N);

/// omega'(n) = max over K_{|n|} on Z; omega'(0) = max over K_1, constant
/// beyond the last materialized level.
class UniformGrsWeight {
 public:
  explicit UniformGrsWeight(std::vector<double> values, bool heuristic = false)
      : values_(std::move(values)), heuristic_(heuristic) {}

  double operator()(std::int64_t n) const;
  const std::vector<double>& values() const { return values_; }
  bool heuristic() const { return heuristic_; }
  /// (omega'(n))^{1/n}, n = 1 .. levels.
  std::vector<double> root_sequence() const;
  /// First (m, n), 0 <= m, n, m + n <= levels, with omega'(m+n) > omega'(m) omega'(n).
  std::optional<std::pair<std::size_t, std::size_t>> submultiplicativity_violation() const;

 private:
  std::vector<double> values_;
  bool heuristic_;
};

UniformGrsWeight uniform_grs_weight(const Weight& omega);

enum class LqVerdict { convergent, divergent, undetermined };

struct LqMembership {
  double q = 1;
  /// S_1, ..., S_L.
  std::vector<double> partial_sums;
  LqVerdict verdict = LqVerdict::undetermined;
  /// Registered closed-form bound at each L, when a certificate applies.
  std::vector<double> bounds;
  std::optional<double> limit;
  /// Verdict from a ratio comparison on the last terms rather than a certificate.
  bool heuristic = true;
};

LqMembership lq_membership(const Weight& omega, double q, std::size_t L);

/// Summable positive sequence f(n), n >= 1.
struct SummableSequence {
  enum class Kind { geometric, power } kind = Kind::geometric;
  /// geometric: c r^n; power: c n^{-s}.
  double c = 1;
  double r = 0.5;
  double s = 2;

  double operator()(std::size_t n) const;
  double sum() const;
  double partial_sum(std::size_t L) const;
  std::string describe() const;
};

/// 1 on K_1 and (M^n / f(n))^{1/q} on K_{n+1} \ K_n, M the largest index.
Weight wfq_weight(const ShellModel& model, const SummableSequence& f, double q);

/// prod over nonzero coordinates m of C_n of n^{max(m, n-m)} on the chain
/// built from orders (1, 2, 3, ...).
Weight nonsubadditive_example(const GroupChain& chain);

struct WitnessRow {
  std::size_t n = 0;
  double ratio = 0;
  double closed_form = 0;
};

/// omega(x_{2n}^n x_{4n}^{2n}) / (omega(x_{2n}^n) + omega(x_{4n}^{2n})) for
/// n = 1 .. floor(depth / 4), evaluated on group elements.
std::vector<WitnessRow> nonsubadditive_witness(const Weight& example);

struct AxiomReport {
  std::size_t level = 0;
  std::uint64_t pairs = 0;
  bool exhaustive = true;
  bool submultiplicative = true;
  double max_submult_ratio = 0;
  bool symmetric = true;
  /// max omega(xy) / (omega(x) + omega(y)).
  double subadditive_constant = 0;
  /// max omega(xy) / max(omega(x), omega(y)).
  double max_form_constant = 0;
  double level_max = 0;
  double level_min = 0;
};

inline constexpr std::uint64_t kExhaustivePairCap = 100000000;

AxiomReport check_axioms(const Weight& omega, std::size_t level, std::uint64_t seed = 1,
                         std::uint64_t pair_cap = kExhaustivePairCap);

}  // namespace orlab
