// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "config.hpp"

namespace lab {

/// info rows carry raw values; warn is a failed soft contract; fail a failed hard one.
enum class Verdict { info, pass, warn, fail };

const char* to_string(Verdict v);

struct Row {
  std::string experiment;
  std::string name;
  double value = 0;
  std::optional<double> bound;
  Verdict verdict = Verdict::info;
};

struct Report {
  std::string param_hash;
  std::vector<Row> rows;
  std::size_t hard_failures() const;
  std::size_t warnings() const;
};

std::vector<Row> run_thm1(const LabConfig& config, const Model& model);
std::vector<Row> run_weights(const LabConfig& config, const Model& model);
std::vector<Row> run_calculus(const LabConfig& config, const Model& model);
std::vector<Row> run_suite(const LabConfig& config, const Model& model);

/// Runs the configured experiments concurrently and concatenates their rows
/// in the fixed order of kExperiments.
Report run_experiments(const LabConfig& config, const Model& model);

/// Checks that every configured experiment can run on the model without
/// executing it; throws ConfigError otherwise.
void check_experiments(const LabConfig& config, const Model& model);

/// CSV body: header line and rows, no timestamp.
std::string csv_body(const Report& report);

struct WrittenReport {
  std::string csv_path;
  std::string json_path;
};

WrittenReport write_report(const LabConfig& config, const Report& report, const std::string& dir);

}  // namespace lab
