// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "orlab/error.hpp"
#include "orlab/funcalc.hpp"
#include "orlab/group_chain.hpp"
#include "orlab/weights.hpp"
#include "orlab/young.hpp"

namespace lab {

/// Malformed or inconsistent configuration.
class ConfigError : public orlab::ValidationError {
 public:
  using orlab::ValidationError::ValidationError;
};

struct GroupConfig {
  std::string kind = "cyclic_sum";
  std::vector<std::uint64_t> orders{2, 2, 2};
  std::size_t depth = 3;
  std::string haar = "normalized";
  bool lazy = false;
  std::vector<std::uint64_t> indices;
  bool bounded = true;
};

struct YoungConfig {
  std::string kind = "p_power";
  double p = 2;
};

struct SequenceConfig {
  std::string kind = "geometric";
  double c = 1;
  double r = 0.5;
  double s = 2;
};

struct WeightConfig {
  std::string kind = "trivial";
  std::vector<double> values;
  double p = 1;
  double q = 1;
  SequenceConfig f;
  std::shared_ptr<WeightConfig> base;
};

struct CalculusConfig {
  double gamma = 0.5;
  double p = 1;
  double q = 3;
  double eps = 0.5;
  double tol = 1e-6;
  std::size_t samples = 5;
  std::size_t level = 0;
  int growth_n = 40;
};

struct Thm1Config {
  std::string element = "random";
  std::size_t samples = 5;
  std::size_t level = 2;
  std::size_t generator = 2;
  double scale = 1;
  std::size_t k = 12;
  double tol_rel = 0.05;
};

struct WeightsRunConfig {
  double p = 1;
  std::size_t grs_n = 1000;
};

struct SuiteConfig {
  std::size_t samples = 1000;
  std::size_t level = 0;
};

struct OutputConfig {
  std::string dir = "results";
  std::string stem;
};

inline const std::vector<std::string> kExperiments{"run_thm1", "run_weights", "run_calculus", "run_suite"};

struct LabConfig {
  std::vector<std::string> experiments;
  std::uint64_t seed = 0;
  GroupConfig group;
  YoungConfig young;
  WeightConfig weight;
  CalculusConfig calculus;
  Thm1Config thm1;
  WeightsRunConfig weights;
  SuiteConfig suite;
  OutputConfig output;
  /// Fully defaulted config without the output section; the hash input.
  nlohmann::json canonical;
};

LabConfig parse_config(const nlohmann::json& j);
LabConfig load_config(const std::string& path);

/// 16 hex digits of FNV-1a over the canonical config dump and the code version.
std::string config_hash(const LabConfig& config);

/// Concrete objects named by a config.
struct Model {
  std::optional<orlab::GroupChain> chain;
  std::optional<orlab::ShellModel> shells;
  orlab::YoungFunction young = orlab::YoungFunction::p_power(2);
  std::shared_ptr<const orlab::Weight> weight;
};

Model build_model(const LabConfig& config);
orlab::YoungFunction build_young(const YoungConfig& y);
std::shared_ptr<const orlab::Weight> build_weight(const WeightConfig& w, const Model& model);
orlab::AGammaFunction build_plateau(const CalculusConfig& c);

}  // namespace lab
