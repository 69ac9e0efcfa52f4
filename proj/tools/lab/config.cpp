// SPDX-License-Identifier: Apache-2.0
#include "config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "version.hpp"

namespace lab {

using nlohmann::json;

namespace {

// Reads one JSON object, remembering which keys were consumed so that
// anything left over can be rejected.
class Section {
 public:
  Section(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError(path_ + ": expected an object");
  }

  bool has(const std::string& key) const { return j_.contains(key); }

  const json& raw(const std::string& key) {
    seen_.insert(key);
    return j_.at(key);
  }

  double number(const std::string& key, double fallback) {
    if (!has(key)) return fallback;
    const auto& v = raw(key);
    if (!v.is_number()) throw ConfigError(where(key) + ": expected a number");
    return v.get<double>();
  }

  std::uint64_t count(const std::string& key, std::uint64_t fallback) {
    if (!has(key)) return fallback;
    const auto& v = raw(key);
    if (!v.is_number_unsigned()) throw ConfigError(where(key) + ": expected a non-negative integer");
    return v.get<std::uint64_t>();
  }

  bool flag(const std::string& key, bool fallback) {
    if (!has(key)) return fallback;
    const auto& v = raw(key);
    if (!v.is_boolean()) throw ConfigError(where(key) + ": expected true or false");
    return v.get<bool>();
  }

  std::string text(const std::string& key, const std::string& fallback, const std::set<std::string>& allowed = {}) {
    if (!has(key)) return fallback;
    const auto& v = raw(key);
    if (!v.is_string()) throw ConfigError(where(key) + ": expected a string");
    auto s = v.get<std::string>();
    if (!allowed.empty() && !allowed.contains(s)) {
      std::string list;
      for (const auto& a : allowed) list += (list.empty() ? "" : "|") + a;
      throw ConfigError(where(key) + ": '" + s + "' is not one of " + list);
    }
    return s;
  }

  std::vector<std::uint64_t> counts(const std::string& key, std::vector<std::uint64_t> fallback) {
    if (!has(key)) return fallback;
    const auto& v = raw(key);
    if (!v.is_array()) throw ConfigError(where(key) + ": expected an array of integers");
    std::vector<std::uint64_t> out;
    for (const auto& e : v) {
      if (!e.is_number_unsigned()) throw ConfigError(where(key) + ": expected an array of integers");
      out.push_back(e.get<std::uint64_t>());
    }
    return out;
  }

  std::vector<double> numbers(const std::string& key) {
    if (!has(key)) return {};
    const auto& v = raw(key);
    if (!v.is_array()) throw ConfigError(where(key) + ": expected an array of numbers");
    std::vector<double> out;
    for (const auto& e : v) {
      if (!e.is_number()) throw ConfigError(where(key) + ": expected an array of numbers");
      out.push_back(e.get<double>());
    }
    return out;
  }

  Section sub(const std::string& key) { return Section(raw(key), where(key)); }

  void finish() const {
    for (const auto& [k, v] : j_.items())
      if (!seen_.contains(k)) throw ConfigError(where(k) + ": unknown key");
  }

  std::string where(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

GroupConfig parse_group(Section s) {
  GroupConfig g;
  g.kind = s.text("kind", g.kind, {"cyclic_sum", "leptin_hulanicki", "shell"});
  if (g.kind == "cyclic_sum") {
    g.orders = s.counts("orders", g.orders);
    g.depth = s.count("depth", g.orders.size());
  } else if (g.kind == "leptin_hulanicki") {
    g.orders.clear();
    g.depth = s.count("depth", 1);
  } else {
    g.orders.clear();
    g.depth = 0;
    if (!s.has("indices")) throw ConfigError("group.indices: required for kind shell");
    g.indices = s.counts("indices", {});
    g.bounded = s.flag("bounded", true);
  }
  if (g.kind != "shell") {
    g.haar = s.text("haar", g.haar, {"normalized", "counting"});
    g.lazy = s.flag("lazy", false);
  }
  s.finish();
  return g;
}

YoungConfig parse_young(Section s) {
  YoungConfig y;
  y.kind = s.text("kind", y.kind, {"p_power", "exp_minus", "cosh", "xlog"});
  if (y.kind == "p_power") y.p = s.number("p", y.p);
  else y.p = 0;
  s.finish();
  return y;
}

WeightConfig parse_weight(Section s) {
  WeightConfig w;
  w.kind = s.text("kind", w.kind, {"trivial", "radial", "sharpen", "sharpen_p", "wfq", "example_nonsubadd"});
  if (w.kind == "radial") {
    if (!s.has("values")) throw ConfigError(s.where("values") + ": required for kind radial");
    w.values = s.numbers("values");
  } else if (w.kind == "sharpen" || w.kind == "sharpen_p") {
    if (w.kind == "sharpen_p") w.p = s.number("p", 1);
    w.base = std::make_shared<WeightConfig>(s.has("base") ? parse_weight(s.sub("base")) : WeightConfig{});
  } else if (w.kind == "wfq") {
    w.q = s.number("q", 1);
    if (s.has("f")) {
      auto f = s.sub("f");
      w.f.kind = f.text("kind", "geometric", {"geometric", "power"});
      w.f.c = f.number("c", 1);
      if (w.f.kind == "geometric") w.f.r = f.number("r", 0.5);
      else w.f.s = f.number("s", 2);
      f.finish();
    }
  }
  s.finish();
  return w;
}

json weight_json(const WeightConfig& w) {
  json j{{"kind", w.kind}};
  if (w.kind == "radial") j["values"] = w.values;
  if (w.kind == "sharpen_p") j["p"] = w.p;
  if (w.base) j["base"] = weight_json(*w.base);
  if (w.kind == "wfq") {
    j["q"] = w.q;
    j["f"] = w.f.kind == "geometric" ? json{{"kind", "geometric"}, {"c", w.f.c}, {"r", w.f.r}}
                                     : json{{"kind", "power"}, {"c", w.f.c}, {"s", w.f.s}};
  }
  return j;
}

}  // namespace

LabConfig parse_config(const json& j) {
  Section root(j, "");
  LabConfig c;

  if (!root.has("seed")) throw ConfigError("seed: required");
  c.seed = root.count("seed", 0);

  if (!root.has("experiments")) throw ConfigError("experiments: required");
  const auto& ex = root.raw("experiments");
  if (!ex.is_array() || ex.empty()) throw ConfigError("experiments: expected a non-empty array");
  for (const auto& e : ex) {
    if (!e.is_string()) throw ConfigError("experiments: expected experiment names");
    const auto name = e.get<std::string>();
    if (std::find(kExperiments.begin(), kExperiments.end(), name) == kExperiments.end())
      throw ConfigError("experiments: unknown experiment '" + name + "'");
    if (std::find(c.experiments.begin(), c.experiments.end(), name) != c.experiments.end())
      throw ConfigError("experiments: '" + name + "' listed twice");
    c.experiments.push_back(name);
  }

  if (root.has("group")) c.group = parse_group(root.sub("group"));
  if (root.has("young")) c.young = parse_young(root.sub("young"));
  if (root.has("weight")) c.weight = parse_weight(root.sub("weight"));

  if (root.has("calculus")) {
    auto s = root.sub("calculus");
    c.calculus.gamma = s.number("gamma", c.calculus.gamma);
    if (s.has("plateau")) {
      auto p = s.sub("plateau");
      c.calculus.p = p.number("p", c.calculus.p);
      c.calculus.q = p.number("q", c.calculus.q);
      c.calculus.eps = p.number("eps", c.calculus.eps);
      p.finish();
    }
    c.calculus.tol = s.number("tol", c.calculus.tol);
    c.calculus.samples = s.count("samples", c.calculus.samples);
    c.calculus.level = s.count("level", c.calculus.level);
    c.calculus.growth_n = static_cast<int>(s.count("growth_n", static_cast<std::uint64_t>(c.calculus.growth_n)));
    s.finish();
  }
  if (root.has("thm1")) {
    auto s = root.sub("thm1");
    c.thm1.element = s.text("element", c.thm1.element, {"random", "pair", "unit"});
    c.thm1.samples = s.count("samples", c.thm1.samples);
    c.thm1.level = s.count("level", c.thm1.level);
    c.thm1.generator = s.count("generator", c.thm1.generator);
    c.thm1.scale = s.number("scale", c.thm1.scale);
    c.thm1.k = s.count("k", c.thm1.k);
    c.thm1.tol_rel = s.number("tol_rel", c.thm1.tol_rel);
    s.finish();
  }
  if (root.has("weights")) {
    auto s = root.sub("weights");
    c.weights.p = s.number("p", c.weights.p);
    c.weights.grs_n = s.count("grs_n", c.weights.grs_n);
    s.finish();
  }
  if (root.has("suite")) {
    auto s = root.sub("suite");
    c.suite.samples = s.count("samples", c.suite.samples);
    c.suite.level = s.count("level", c.suite.level);
    s.finish();
  }
  if (root.has("output")) {
    auto s = root.sub("output");
    c.output.dir = s.text("dir", c.output.dir);
    c.output.stem = s.text("stem", c.output.stem);
    s.finish();
  }
  root.finish();

  if (c.calculus.tol <= 0) throw ConfigError("calculus.tol: must be > 0");
  if (c.thm1.k < 1 || c.thm1.k > 40) throw ConfigError("thm1.k: must lie in 1..40");
  if (c.thm1.tol_rel <= 0) throw ConfigError("thm1.tol_rel: must be > 0");
  if (c.thm1.samples < 1) throw ConfigError("thm1.samples: must be >= 1");
  if (c.suite.samples < 1) throw ConfigError("suite.samples: must be >= 1");
  if (c.weights.grs_n < 1) throw ConfigError("weights.grs_n: must be >= 1");
  if (c.weights.p < 1) throw ConfigError("weights.p: must be >= 1");

  json g{{"kind", c.group.kind}};
  if (c.group.kind == "shell") {
    g["indices"] = c.group.indices;
    g["bounded"] = c.group.bounded;
  } else {
    if (c.group.kind == "cyclic_sum") g["orders"] = c.group.orders;
    g["depth"] = c.group.depth;
    g["haar"] = c.group.haar;
    g["lazy"] = c.group.lazy;
  }
  json y{{"kind", c.young.kind}};
  if (c.young.kind == "p_power") y["p"] = c.young.p;
  c.canonical = json{
      {"experiments", c.experiments},
      {"seed", c.seed},
      {"group", g},
      {"young", y},
      {"weight", weight_json(c.weight)},
      {"calculus",
       {{"gamma", c.calculus.gamma},
        {"plateau", {{"p", c.calculus.p}, {"q", c.calculus.q}, {"eps", c.calculus.eps}}},
        {"tol", c.calculus.tol},
        {"samples", c.calculus.samples},
        {"level", c.calculus.level},
        {"growth_n", c.calculus.growth_n}}},
      {"thm1",
       {{"element", c.thm1.element},
        {"samples", c.thm1.samples},
        {"level", c.thm1.level},
        {"generator", c.thm1.generator},
        {"scale", c.thm1.scale},
        {"k", c.thm1.k},
        {"tol_rel", c.thm1.tol_rel}}},
      {"weights", {{"p", c.weights.p}, {"grs_n", c.weights.grs_n}}},
      {"suite", {{"samples", c.suite.samples}, {"level", c.suite.level}}},
  };
  return c;
}

LabConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  auto c = parse_config(j);
  if (c.output.stem.empty()) {
    auto name = path.substr(path.find_last_of("/\\") + 1);
    c.output.stem = name.substr(0, name.rfind('.'));
  }
  return c;
}

std::string config_hash(const LabConfig& config) {
  const std::string input = config.canonical.dump() + "|" + kCodeVersion;
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : input) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

orlab::YoungFunction build_young(const YoungConfig& y) {
  if (y.kind == "p_power") return orlab::YoungFunction::p_power(y.p);
  if (y.kind == "exp_minus") return orlab::YoungFunction::exp_minus();
  if (y.kind == "cosh") return orlab::YoungFunction::cosh_minus_one();
  return orlab::YoungFunction::xlog();
}

namespace {

orlab::Weight build_weight_value(const WeightConfig& w, const Model& m) {
  using orlab::Weight;
  if (w.kind == "trivial") {
    if (m.chain) return Weight::trivial(*m.chain);
    return Weight::radial(*m.shells, std::vector<double>(m.shells->levels(), 1.0), "trivial");
  }
  if (w.kind == "radial") {
    if (m.chain) return Weight::radial(*m.chain, w.values);
    return Weight::radial(*m.shells, w.values);
  }
  if (w.kind == "sharpen") return orlab::sharpen(build_weight_value(*w.base, m));
  if (w.kind == "sharpen_p") return orlab::sharpen_p(build_weight_value(*w.base, m), w.p);
  if (w.kind == "wfq") {
    const orlab::SummableSequence f{w.f.kind == "geometric" ? orlab::SummableSequence::Kind::geometric
                                                           : orlab::SummableSequence::Kind::power,
                                    w.f.c, w.f.r, w.f.s};
    if (m.shells) return orlab::wfq_weight(*m.shells, f, w.q);
    if (m.chain->haar() != orlab::HaarNormalization::normalized)
      throw ConfigError("weight.kind wfq: needs the normalized Haar measure");
    const auto shell_weight = orlab::wfq_weight(orlab::ShellModel(m.chain->indices()), f, w.q);
    auto out = Weight::radial_unchecked(*m.chain, shell_weight.shell_values(), shell_weight.name());
    if (shell_weight.lq_certificate()) out = out.with_certificate(*shell_weight.lq_certificate());
    return out;
  }
  if (!m.chain) throw ConfigError("weight.kind example_nonsubadd: needs a cyclic_sum group");
  return orlab::nonsubadditive_example(*m.chain);
}

}  // namespace

std::shared_ptr<const orlab::Weight> build_weight(const WeightConfig& w, const Model& model) {
  return std::make_shared<const orlab::Weight>(build_weight_value(w, model));
}

Model build_model(const LabConfig& config) {
  Model m;
  const auto& g = config.group;
  orlab::ChainOptions opt;
  opt.haar = g.haar == "counting" ? orlab::HaarNormalization::counting : orlab::HaarNormalization::normalized;
  opt.lazy = g.lazy;
  if (g.kind == "cyclic_sum") m.chain = orlab::build_cyclic_sum(g.orders, g.depth, opt);
  else if (g.kind == "leptin_hulanicki") m.chain = orlab::build_leptin_hulanicki(g.depth, opt);
  else m.shells = orlab::ShellModel(g.indices, g.bounded);
  m.young = build_young(config.young);
  m.weight = build_weight(config.weight, m);
  return m;
}

orlab::AGammaFunction build_plateau(const CalculusConfig& c) {
  return orlab::AGammaFunction::plateau(c.p, c.q, c.eps, c.gamma);
}

}  // namespace lab
