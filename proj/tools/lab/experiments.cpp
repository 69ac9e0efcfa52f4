// SPDX-License-Identifier: Apache-2.0
#include "experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <future>
#include <random>
#include <sstream>

#include "orlab/convalg.hpp"
#include "orlab/funcalc.hpp"
#include "orlab/orlicz_norms.hpp"
#include "version.hpp"

namespace lab {

using namespace orlab;

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::info:
      return "info";
    case Verdict::pass:
      return "pass";
    case Verdict::warn:
      return "warn";
    case Verdict::fail:
      return "fail";
  }
  return "?";
}

std::size_t Report::hard_failures() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const Row& r) { return r.verdict == Verdict::fail; }));
}

std::size_t Report::warnings() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const Row& r) { return r.verdict == Verdict::warn; }));
}

namespace {

constexpr double kMargin = 1e-9;
constexpr std::uint64_t kDenseCap = 256;

class Rows {
 public:
  explicit Rows(std::string experiment) : experiment_(std::move(experiment)) {}

  void info(const std::string& name, double value, std::optional<double> bound = std::nullopt) {
    rows_.push_back({experiment_, name, value, bound, Verdict::info});
  }
  void hard(const std::string& name, double value, double bound, bool ok) {
    rows_.push_back({experiment_, name, value, bound, ok ? Verdict::pass : Verdict::fail});
  }
  void soft(const std::string& name, double value, std::optional<double> bound, bool ok) {
    rows_.push_back({experiment_, name, value, bound, ok ? Verdict::pass : Verdict::warn});
  }
  /// value <= bound up to the absolute margin.
  void hard_le(const std::string& name, double value, double bound, double margin = kMargin) {
    hard(name, value, bound, value <= bound + margin);
  }

  std::vector<Row> take() { return std::move(rows_); }

 private:
  std::string experiment_;
  std::vector<Row> rows_;
};

std::uint64_t experiment_seed(std::uint64_t seed, const std::string& name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : name) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return seed ^ h;
}

const GroupChain& require_chain(const Model& m, const char* experiment) {
  if (!m.chain) throw ConfigError(std::string(experiment) + ": needs a group (kind cyclic_sum or leptin_hulanicki)");
  return *m.chain;
}

std::size_t top_dense_level(const GroupChain& chain, std::size_t requested, const char* experiment) {
  if (requested > 0) {
    if (requested > chain.levels()) throw ConfigError(std::string(experiment) + ": level exceeds the chain depth");
    chain.require_enumerable(requested);
    return requested;
  }
  std::size_t best = 0;
  for (std::size_t l = 1; l <= chain.levels(); ++l)
    if (chain.enumerable(l) && chain.order(l) <= kDenseCap) best = l;
  if (best == 0) throw ConfigError(std::string(experiment) + ": no enumerable level of order <= 256");
  return best;
}

std::string idx(const char* prefix, std::size_t i) { return prefix + std::to_string(i); }

void delta2_row(Rows& rows, const YoungFunction& phi) {
  const auto d = delta2_constant(phi);
  rows.soft("young.delta2_constant", d.constant, std::nullopt, d.bounded);
}

// Thm1 weight: base weight restricted to the standardized chain, then sharpened with p = 1.
struct Thm1Setup {
  GroupChain chain;
  std::shared_ptr<const Weight> weight;
};

Thm1Setup thm1_setup(const Model& model) {
  const auto& chain = require_chain(model, "run_thm1");
  if (chain.levels() < 2) throw ConfigError("run_thm1: the chain needs at least two levels to standardize");
  GroupChain std_chain = standardize(chain);
  Weight base = *model.weight;
  if (!is_standard(chain.indices())) {
    auto w = model.weight;
    base = Weight::pointwise(std_chain, [w](Element x) { return (*w)(x); }, w->name());
  }
  return {std_chain, std::make_shared<const Weight>(sharpen_p(base, 1))};
}

std::vector<FinSuppFun> thm1_elements(const LabConfig& config, const GroupChain& chain, std::size_t level) {
  const auto& t = config.thm1;
  std::vector<FinSuppFun> out;
  if (t.element == "unit") {
    out.push_back(FinSuppFun::unit(chain) * Complex(t.scale));
  } else if (t.element == "pair") {
    const auto gens = chain.generators();
    if (t.generator < 1 || t.generator > gens.size()) throw ConfigError("thm1.generator: out of range");
    const Element a = gens[t.generator - 1];
    out.push_back((FinSuppFun::delta(chain, a) + FinSuppFun::delta(chain, chain.inv(a))) * Complex(0.5 * t.scale));
  } else {
    std::mt19937_64 rng(experiment_seed(config.seed, "run_thm1"));
    for (std::size_t i = 0; i < t.samples; ++i) out.push_back(random_self_adjoint(chain, level, rng) * Complex(t.scale));
  }
  return out;
}

}  // namespace

std::vector<Row> run_thm1(const LabConfig& config, const Model& model) {
  Rows rows("run_thm1");
  const auto setup = thm1_setup(model);
  const auto& t = config.thm1;
  if (t.level < 1 || t.level > setup.chain.levels()) throw ConfigError("thm1.level: out of range for the standardized chain");
  setup.chain.require_enumerable(t.level);
  const NormSpec l1 = NormSpec::l1();
  const NormSpec orl = NormSpec::orlicz(model.young, setup.weight);
  delta2_row(rows, model.young);
  const auto elements = thm1_elements(config, setup.chain, t.level);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const std::string f = idx("f", i);
    const auto reps = gelfand_sequence(elements[i], {l1, orl}, t.k);
    const double r = reps[0].exact_radius;
    rows.info(f + ".exact_radius", r);
    for (std::size_t k = 0; k < reps[0].values.size(); ++k) rows.info(f + ".L1." + idx("k", k), reps[0].values[k], r);
    for (std::size_t k = 0; k < reps[1].values.size(); ++k)
      rows.info(f + ".orlicz_w." + idx("k", k), reps[1].values[k], r);
    // ||f^n||^{1/n} >= r for any sub-multiplicative norm.
    rows.hard(f + ".L1.min_excess", reps[0].min_excess, 0, reps[0].min_excess >= -kMargin * std::max(1.0, r));
    rows.soft(f + ".orlicz_w.rel_error", reps[1].final_rel_error, t.tol_rel, reps[1].final_rel_error <= t.tol_rel);
  }
  return rows.take();
}

std::vector<Row> run_weights(const LabConfig& config, const Model& model) {
  Rows rows("run_weights");
  const Weight& w = *model.weight;
  const double p = config.weights.p;
  const Weight sharp = sharpen(w);
  const Weight sharp_p = sharpen_p(w, p);
  const std::size_t L = w.levels();

  if (w.is_radial())
    for (std::size_t i = 0; i < L; ++i) rows.info(idx("omega.shell", i + 1), w.shell_values()[i]);
  for (std::size_t i = 0; i < L; ++i) rows.info(idx("sharp.shell", i + 1), sharp.shell_values()[i]);
  for (std::size_t i = 0; i < L; ++i) rows.info(idx("sharp_p.shell", i + 1), sharp_p.shell_values()[i]);

  const double var = variation(w, L);
  rows.info("variation", var);
  double r1 = 0, r2 = 0, r3 = 0;
  bool exhaustive = true;
  auto compare = [&](double a, double s, double sp) {
    r1 = std::max(r1, a / s);
    r2 = std::max(r2, s / sp);
    r3 = std::max(r3, s / ((var + 1) * a));
  };
  if (model.chain) {
    const auto& chain = *model.chain;
    for (std::size_t l = 1; l <= L; ++l) {
      if (!chain.enumerable(l)) {
        exhaustive = false;
        continue;
      }
      const std::uint64_t from = l == 1 ? 0 : chain.order(l - 1);
      for (std::uint64_t id = from; id < chain.order(l); ++id) {
        const Element x{id};
        compare(w(x), sharp(x), sharp_p(x));
      }
    }
  } else {
    for (std::size_t i = 0; i < L; ++i)
      compare(w.shell_values()[i], sharp.shell_values()[i], sharp_p.shell_values()[i]);
  }
  rows.info("order.exhaustive", exhaustive ? 1 : 0);
  rows.hard_le("order.max_omega_over_sharp", r1, 1);
  rows.hard_le("order.max_sharp_over_sharp_p", r2, 1);
  rows.hard_le("order.max_sharp_over_var_bound", r3, 1);

  const double q = conjugate_exponent(p);
  const auto lq = lq_membership(sharp_p, q, L);
  for (std::size_t l = 0; l < L; ++l) {
    const double bound = lq.bounds.empty() ? std::numeric_limits<double>::infinity() : lq.bounds[l];
    rows.hard_le(idx("lq.sharp_p.S", l + 1), lq.partial_sums[l], bound, 1e-12 * bound);
  }
  if (lq.limit) rows.info("lq.sharp_p.limit", *lq.limit);

  if (config.weight.kind == "wfq") {
    const auto lw = lq_membership(w, config.weight.q, L);
    for (std::size_t l = 0; l < L; ++l) {
      const double bound = lw.bounds.empty() ? std::numeric_limits<double>::infinity() : lw.bounds[l];
      rows.hard(idx("lq.wfq.S", l + 1), lw.partial_sums[l], bound, lw.partial_sums[l] < bound);
    }
  }

  if (model.chain) {
    const auto& chain = *model.chain;
    std::size_t top = 0;
    for (std::size_t l = 1; l <= chain.levels(); ++l)
      if (chain.enumerable(l) && chain.order(l) <= 4096) top = l;
    if (top > 0) {
      const auto ax = check_axioms(w, top, experiment_seed(config.seed, "run_weights"));
      rows.info("axioms.level", static_cast<double>(top));
      rows.info("axioms.exhaustive", ax.exhaustive ? 1 : 0);
      rows.info("axioms.submultiplicative", ax.submultiplicative ? 1 : 0);
      rows.info("axioms.max_submult_ratio", ax.max_submult_ratio);
      rows.info("axioms.subadditive_constant", ax.subadditive_constant);
      rows.info("axioms.max_form_constant", ax.max_form_constant);
      if (is_standard(chain.indices())) {
        const auto axp = check_axioms(sharp_p, top, experiment_seed(config.seed, "run_weights"));
        rows.soft("axioms.sharp_p.max_form_constant", axp.max_form_constant, 1, axp.max_form_constant <= 1 + kMargin);
      }
    }

    const std::size_t N = config.weights.grs_n;
    const auto gens = chain.generators();
    const std::pair<const char*, const Weight*> weights[] = {{"omega", &w}, {"sharp", &sharp}, {"sharp_p", &sharp_p}};
    for (const auto& [tag, ww] : weights) {
      for (std::size_t j = 0; j < gens.size(); ++j) {
        const auto s = grs_sequence(*ww, gens[j], N);
        const std::string base = std::string("grs.") + tag + "." + idx("x", j + 1);
        rows.info(base + ".C", s.cyclic_sup);
        rows.hard(base + ".last", s.values.back(), std::pow(s.cyclic_sup, 1.0 / static_cast<double>(N)), s.contained);
      }
    }

    const auto u = uniform_grs_weight(w);
    const auto roots = u.root_sequence();
    for (std::size_t n = 0; n < roots.size(); ++n) rows.info(idx("uniform.root.n", n + 1), roots[n]);
    rows.info("uniform.submultiplicative", u.submultiplicativity_violation() ? 0 : 1);
  }

  if (config.weight.kind == "example_nonsubadd") {
    const auto wit = nonsubadditive_witness(w);
    for (std::size_t i = 0; i < wit.size(); ++i) {
      const auto& r = wit[i];
      rows.hard(idx("witness.r", r.n), r.ratio, r.closed_form,
                std::abs(r.ratio - r.closed_form) <= 1e-12 * r.closed_form);
      if (i > 0)
        rows.hard(idx("witness.increase", r.n), r.ratio - wit[i - 1].ratio, 0, r.ratio > wit[i - 1].ratio);
    }
  }
  return rows.take();
}

std::vector<Row> run_calculus(const LabConfig& config, const Model& model) {
  Rows rows("run_calculus");
  const auto& chain = require_chain(model, "run_calculus");
  const auto& c = config.calculus;
  const std::size_t level = top_dense_level(chain, c.level, "run_calculus");
  const AGammaFunction phi = build_plateau(c);

  rows.info("plateau.range", static_cast<double>(phi.range()));
  rows.info("plateau.truncation_l1", phi.truncation_l1());
  rows.info("plateau.weighted_norm", phi.weighted_norm());
  const auto blocks = phi.weighted_block_sums();
  double partial = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) rows.info(idx("plateau.weighted_partial.b", b), partial += blocks[b]);
  const double rem = phi.weighted_remainder() / phi.weighted_norm();
  rows.soft("plateau.remainder_fraction", rem, 1e-8, rem < 1e-8);

  const auto prof = plateau_profile(phi, c.p, c.q, c.eps);
  rows.hard_le("profile.max_abs_outside", prof.max_abs_outside, 1e-6, 0);
  rows.hard_le("profile.max_dev_inside", prof.max_dev_inside, 1e-6, 0);
  rows.info("profile.min_value", prof.min_value);
  rows.info("profile.max_value", prof.max_value);

  const double two_pi = 2 * std::acos(-1.0);
  // psi is 1 on [p/2 + e, q2 - e], which contains [p, q].
  const double q2 = c.q + (two_pi - c.q) / 2;
  const double e_wide = std::min(c.p / 2, (two_pi - c.q) / 2) / 2;
  const AGammaFunction psi = AGammaFunction::plateau(c.p / 2, q2, e_wide, c.gamma);
  const double mid = (c.p + c.q) / 2;
  const AGammaFunction chi = AGammaFunction::plateau(mid, q2, std::min(c.eps, (q2 - mid) / 4), c.gamma);
  const AGammaFunction prod = pointwise_product(phi, chi);

  std::mt19937_64 rng(experiment_seed(config.seed, "run_calculus"));
  for (std::size_t i = 0; i < c.samples; ++i) {
    const std::string f = idx("f", i);
    const auto x = random_self_adjoint(chain, level, rng);
    const auto series = apply_series(phi, x, c.tol);
    const auto spectral = apply_spectral(phi, x);
    rows.info(f + ".series_terms", static_cast<double>(series.N));
    rows.hard_le(f + ".series_tail", series.tail_bound, c.tol, 0);
    rows.hard_le(f + ".dual_path", l1_norm(series.value - spectral), c.tol + 1e-8, 0);
    const auto hom = l1_norm(apply_spectral(prod, x) - convolve(spectral, apply_spectral(chi, x)));
    rows.hard_le(f + ".homomorphism", hom, 1e-6, 0);
    const auto part = l1_norm(convolve(apply_spectral(psi, x), spectral) - spectral);
    rows.hard_le(f + ".partition", part, 1e-8, 0);
  }

  if (std::abs(psi(1.0) - 1.0) <= 1e-6) {
    auto g = random_function(chain, level, rng);
    const auto table = approx_identity_convergence(psi, NormSpec::l1(), g);
    for (const auto& r : table.rows) rows.info(idx("approx.level", r.level), r.value);
    rows.hard_le("approx.at_unit", table.rows.back().value, 1e-8, 0);
    rows.soft("approx.monotone", table.monotone ? 1 : 0, std::nullopt, table.monotone);
  }

  const auto x = random_self_adjoint(chain, level, rng);
  const auto growth = growth_profile(x, c.gamma, c.growth_n, NormSpec::l1());
  for (const auto& r : growth.rows) rows.info(idx("growth.n", static_cast<std::size_t>(r.n)), r.value, growth.unitary_bound);
  rows.info("growth.fitted_constant", growth.fitted_constant);
  double worst = 0;
  for (const auto& r : growth.rows) worst = std::max(worst, r.value);
  rows.hard_le("growth.max", worst, growth.unitary_bound);
  return rows.take();
}

std::vector<Row> run_suite(const LabConfig& config, const Model& model) {
  Rows rows("run_suite");
  const auto& chain = require_chain(model, "run_suite");
  const std::size_t level = top_dense_level(chain, config.suite.level, "run_suite");
  const std::size_t n = config.suite.samples;
  const auto seed = experiment_seed(config.seed, "run_suite");
  const auto& phi = model.young;
  const Weight& w = *model.weight;
  delta2_row(rows, phi);

  const auto ineq = inequality_suite(chain, level, phi, w, n, seed);
  rows.info("ineq.samples", static_cast<double>(ineq.samples));
  rows.info("ineq.max_r2", ineq.max_r2);
  if (ineq.exploratory) {
    rows.soft("ineq.max_r3", ineq.max_r3, 1, ineq.r3_ok);
    rows.soft("ineq.max_rL", ineq.max_rL, 1, ineq.rL_ok);
  } else {
    rows.hard("ineq.max_r3", ineq.max_r3, 1, ineq.r3_ok);
    rows.hard("ineq.max_rL", ineq.max_rL, 1, ineq.rL_ok);
  }

  std::mt19937_64 rng(seed + 1);
  double holder = 0, lo = std::numeric_limits<double>::infinity(), hi = 0, majorant = 0, recursion = 0;
  const bool radial = w.is_radial() && w.on_chain();
  for (std::size_t i = 0; i < n; ++i) {
    const auto f = random_function(chain, level, rng);
    const auto g = random_function(chain, level, rng);
    const auto [lhs, rhs] = holder_sides(f, g, phi);
    holder = std::max(holder, lhs / rhs);
    const double ratio = orlicz_norm(f, phi, &w) / luxemburg_norm(f, phi, &w);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
    if (radial) {
      const auto [a, b] = radial_majorant_check(f, w, 2 + i % 4);
      majorant = std::max(majorant, a / b);
    }
    const auto u1 = u_series(f, 1, 1e-15).value;
    const auto u2 = u_series(f * Complex(2), 1, 1e-15).value;
    recursion = std::max(recursion, l1_norm(u2 - (u1 * Complex(2) + convolve(u1, u1))) / (1 + l1_norm(u2)));
  }
  rows.hard_le("holder.max_ratio", holder, 1);
  rows.hard("sandwich.min", lo, 1, lo >= 1 - kMargin);
  rows.hard("sandwich.max", hi, 2, hi <= 2 + kMargin);
  if (radial) rows.hard_le("majorant.max_ratio", majorant, 1);
  rows.hard_le("u_recursion.max_residual", recursion, kMargin, 0);
  return rows.take();
}

Report run_experiments(const LabConfig& config, const Model& model) {
  Report report;
  report.param_hash = std::string(kCodeVersion) + "-" + config_hash(config);
  std::vector<std::pair<std::string, std::future<std::vector<Row>>>> tasks;
  for (const auto& name : kExperiments) {
    if (std::find(config.experiments.begin(), config.experiments.end(), name) == config.experiments.end()) continue;
    auto fn = name == "run_thm1"       ? run_thm1
              : name == "run_weights"  ? run_weights
              : name == "run_calculus" ? run_calculus
                                       : run_suite;
    tasks.emplace_back(name, std::async(std::launch::async, fn, std::cref(config), std::cref(model)));
  }
  for (auto& [name, fut] : tasks) {
    auto rows = fut.get();
    report.rows.insert(report.rows.end(), rows.begin(), rows.end());
  }
  return report;
}

void check_experiments(const LabConfig& config, const Model& model) {
  for (const auto& name : config.experiments) {
    if (name == "run_weights") continue;
    const auto& chain = require_chain(model, name.c_str());
    if (name == "run_thm1") {
      const auto setup = thm1_setup(model);
      if (config.thm1.level < 1 || config.thm1.level > setup.chain.levels())
        throw ConfigError("thm1.level: out of range for the standardized chain");
      setup.chain.require_enumerable(config.thm1.level);
      if (config.thm1.element == "pair" &&
          (config.thm1.generator < 1 || config.thm1.generator > setup.chain.generators().size()))
        throw ConfigError("thm1.generator: out of range");
    } else if (name == "run_calculus") {
      top_dense_level(chain, config.calculus.level, "run_calculus");
      build_plateau(config.calculus);
    } else {
      top_dense_level(chain, config.suite.level, "run_suite");
    }
  }
}

namespace {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::string csv_body(const Report& report) {
  std::ostringstream os;
  os << "experiment,param_hash,name,value,bound,verdict\n";
  for (const auto& r : report.rows)
    os << r.experiment << ',' << report.param_hash << ',' << r.name << ',' << format_double(r.value) << ','
       << (r.bound ? format_double(*r.bound) : "") << ',' << to_string(r.verdict) << '\n';
  return os.str();
}

WrittenReport write_report(const LabConfig& config, const Report& report, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  const std::string stem = config.output.stem.empty() ? "lab" : config.output.stem;
  WrittenReport out{(fs::path(dir) / (stem + ".csv")).string(), (fs::path(dir) / (stem + ".json")).string()};
  const std::string stamp = timestamp();
  {
    std::ofstream csv(out.csv_path, std::ios::binary);
    csv << "# generated " << stamp << '\n' << csv_body(report);
    if (!csv) throw std::runtime_error("cannot write " + out.csv_path);
  }
  nlohmann::json verdicts = nlohmann::json::array();
  for (const auto& r : report.rows)
    if (r.verdict != Verdict::info)
      verdicts.push_back({{"experiment", r.experiment}, {"name", r.name}, {"verdict", to_string(r.verdict)}});
  const nlohmann::json side{
      {"generated", stamp},
      {"code_version", kCodeVersion},
      {"param_hash", report.param_hash},
      {"config", config.canonical},
      {"verdicts", verdicts},
      {"hard_failures", report.hard_failures()},
      {"warnings", report.warnings()},
  };
  std::ofstream js(out.json_path, std::ios::binary);
  js << side.dump(2) << '\n';
  if (!js) throw std::runtime_error("cannot write " + out.json_path);
  return out;
}

}  // namespace lab
