// SPDX-License-Identifier: Apache-2.0
#include <iostream>

#include <CLI11.hpp>

#include "config.hpp"
#include "experiments.hpp"
#include "version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitContract = 1;
constexpr int kExitConfig = 2;

void list_catalog() {
  std::cout << "group.kind\n"
               "  cyclic_sum        orders=[n1,n2,...] depth haar=normalized|counting lazy\n"
               "  leptin_hulanicki  depth=1|2 (3 with lazy) haar lazy\n"
               "  shell             indices=[...] bounded\n"
               "young.kind\n"
               "  p_power           p >= 1, |x|^p/p\n"
               "  exp_minus         e^|x| - |x| - 1\n"
               "  cosh              cosh(x) - 1\n"
               "  xlog              |x| log(1+|x|)\n"
               "weight.kind\n"
               "  trivial\n"
               "  radial            values=[a1,...] non-decreasing, >= 1\n"
               "  sharpen           base={weight}\n"
               "  sharpen_p         p >= 1, base={weight}\n"
               "  wfq               q >= 1, f={kind:geometric,c,r}|{kind:power,c,s}\n"
               "  example_nonsubadd on cyclic_sum orders=[1,2,3,...]\n"
               "experiments\n";
  for (const auto& e : lab::kExperiments) std::cout << "  " << e << '\n';
}

template <class F>
int guarded(F&& body) {
  try {
    return body();
  } catch (const lab::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
  } catch (const orlab::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
  } catch (const orlab::SizeError& e) {
    std::cerr << "size error: " << e.what() << '\n';
  } catch (const orlab::EnumerationError& e) {
    std::cerr << "enumeration error: " << e.what() << '\n';
  } catch (const orlab::UnsupportedYoungError& e) {
    std::cerr << "unsupported Young function: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitContract;
  }
  return kExitConfig;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted Orlicz convolution algebra experiments"};
  app.set_version_flag("--version", std::string(lab::kCodeVersion));
  app.require_subcommand(1);

  std::string config_path, out_dir;
  auto* run = app.add_subcommand("run", "Run the experiments of a config and write CSV + JSON");
  run->add_option("config", config_path, "config JSON")->required();
  run->add_option("-o,--out-dir", out_dir, "output directory (overrides output.dir)");
  auto* check = app.add_subcommand("check", "Validate a config without running it");
  check->add_option("config", config_path, "config JSON")->required();
  app.add_subcommand("list-catalog", "List groups, Young functions, weights and experiments");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  if (app.got_subcommand("list-catalog")) {
    list_catalog();
    return kExitOk;
  }

  if (app.got_subcommand("check")) {
    return guarded([&] {
      const auto config = lab::load_config(config_path);
      const auto model = lab::build_model(config);
      lab::check_experiments(config, model);
      std::cout << "ok " << lab::kCodeVersion << '-' << lab::config_hash(config) << '\n';
      return kExitOk;
    });
  }

  return guarded([&] {
    const auto config = lab::load_config(config_path);
    const auto model = lab::build_model(config);
    lab::check_experiments(config, model);
    const auto report = lab::run_experiments(config, model);
    const auto written = lab::write_report(config, report, out_dir.empty() ? config.output.dir : out_dir);
    for (const auto& r : report.rows)
      if (r.verdict == lab::Verdict::warn || r.verdict == lab::Verdict::fail)
        std::cerr << lab::to_string(r.verdict) << ": " << r.experiment << ' ' << r.name << " = " << r.value << '\n';
    std::cout << written.csv_path << '\n' << written.json_path << '\n'
              << report.rows.size() << " rows, " << report.hard_failures() << " hard failures, " << report.warnings()
              << " warnings\n";
    return report.hard_failures() > 0 ? kExitContract : kExitOk;
  });
}
