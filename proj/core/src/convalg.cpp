// SPDX-License-Identifier: Apache-2.0
#include "orlab/convalg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include "orlab/error.hpp"

namespace orlab {

namespace {

void require_same_chain(const FinSuppFun& f, const FinSuppFun& g) {
  if (!(f.chain() == g.chain())) throw ChainMismatchError("convolution of functions on different chains");
}

double max_abs(const FinSuppFun& f) {
  double m = 0;
  for (const auto& e : f) m = std::max(m, std::abs(e.second));
  return m;
}

bool self_adjoint_for_solver(const FinSuppFun& f) { return is_self_adjoint(f, 1e-13 * max_abs(f)); }

}  // namespace

FinSuppFun convolve(const FinSuppFun& f, const FinSuppFun& g) {
  require_same_chain(f, g);
  const auto& chain = f.chain();
  const double m = chain.point_mass();
  if (f.empty() || g.empty()) return FinSuppFun(chain);
  const std::size_t level = std::max(f.support_level(), g.support_level());
  if (chain.enumerable(level)) {
    std::vector<Complex> acc(chain.order(level));
    for (const auto& [y, a] : f) {
      const Complex ma = m * a;
      for (const auto& [z, b] : g) acc[chain.mul(y, z).id] += ma * b;
    }
    return FinSuppFun::from_dense(chain, level, acc);
  }
  std::map<std::uint64_t, Complex> acc;
  for (const auto& [y, a] : f)
    for (const auto& [z, b] : g) acc[chain.mul(y, z).id] += m * a * b;
  std::vector<FinSuppFun::Entry> entries;
  for (const auto& [id, v] : acc) entries.emplace_back(Element{id}, v);
  return FinSuppFun::from_entries(chain, std::move(entries));
}

FinSuppFun convolution_power(const FinSuppFun& f, std::uint64_t n) {
  if (n == 0) throw ValidationError("convolution_power: n must be >= 1");
  std::optional<FinSuppFun> result;
  FinSuppFun base = f;
  for (;;) {
    if (n & 1) result = result ? convolve(*result, base) : base;
    n >>= 1;
    if (!n) break;
    base = convolve(base, base);
  }
  return *result;
}

FinSuppFun involution(const FinSuppFun& f) {
  const auto& chain = f.chain();
  std::vector<FinSuppFun::Entry> entries;
  entries.reserve(f.size());
  for (const auto& [x, v] : f) entries.emplace_back(chain.inv(x), std::conj(v));
  return FinSuppFun::from_entries(chain, std::move(entries));
}

bool is_self_adjoint(const FinSuppFun& f, double tol) { return max_abs_diff(f, involution(f)) <= tol; }

FinSuppFun left_translate(const FinSuppFun& f, Element x) {
  const auto& chain = f.chain();
  std::vector<FinSuppFun::Entry> entries;
  entries.reserve(f.size());
  for (const auto& [z, v] : f) entries.emplace_back(chain.mul(x, z), v);
  return FinSuppFun::from_entries(chain, std::move(entries));
}

RegRepMatrix regular_rep(const FinSuppFun& f, std::size_t level) {
  const auto& chain = f.chain();
  if (level == 0) level = f.support_level();
  chain.require_enumerable(level);
  if (f.support_level() > level) throw ValidationError("regular_rep: support exceeds the requested level");
  const auto n = static_cast<Eigen::Index>(chain.order(level));
  const double m = chain.point_mass();
  RegRepMatrix rep{level, Matrix::Zero(n, n)};
  for (Eigen::Index y = 0; y < n; ++y)
    for (const auto& [z, v] : f) rep.matrix(static_cast<Eigen::Index>(chain.mul(z, Element{static_cast<std::uint64_t>(y)}).id), y) = m * v;
  return rep;
}

FinSuppFun pullback(const GroupChain& chain, const RegRepMatrix& rep) {
  const auto n = chain.order(rep.level);
  if (static_cast<std::uint64_t>(rep.matrix.rows()) != n || rep.matrix.cols() != rep.matrix.rows())
    throw ValidationError("pullback: matrix size does not match the level");
  const double m = chain.point_mass();
  std::vector<Complex> values(n);
  for (std::uint64_t x = 0; x < n; ++x) values[x] = rep.matrix(static_cast<Eigen::Index>(x), 0) / m;
  return FinSuppFun::from_dense(chain, rep.level, values);
}

std::vector<Matrix> regular_rep_blocks(const FinSuppFun& f) {
  const auto& chain = f.chain();
  const std::size_t level = f.support_level();
  chain.require_enumerable(level);
  const auto sub = chain.abelian_subgroup(level);
  if (!sub) return {};
  const std::size_t na = sub->elements.size();
  const std::size_t r = sub->coset_representatives.size();
  if (na * r != chain.order(level) || na < 2) return {};
  const std::size_t rank = sub->factor_orders.size();

  std::uint64_t period = 1;
  for (auto n : sub->factor_orders) period = std::lcm(period, static_cast<std::uint64_t>(n));
  std::vector<Complex> roots(period);
  for (std::uint64_t k = 0; k < period; ++k)
    roots[k] = std::polar(1.0, -2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(period));
  std::vector<std::uint64_t> scale(rank);
  for (std::size_t k = 0; k < rank; ++k) scale[k] = period / sub->factor_orders[k];

  // Characters are indexed like the subgroup elements: by coordinate tuples.
  const auto& coords = sub->coordinates;
  const double m = chain.point_mass();
  std::vector<Matrix> blocks(na, Matrix::Zero(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r)));
  std::vector<std::pair<std::size_t, Complex>> g;
  for (std::size_t i = 0; i < r; ++i) {
    const Element ti = sub->coset_representatives[i];
    for (std::size_t j = 0; j < r; ++j) {
      const Element tj_inv = chain.inv(sub->coset_representatives[j]);
      g.clear();
      for (std::size_t c = 0; c < na; ++c) {
        const Complex v = f(chain.mul(chain.mul(ti, sub->elements[c]), tj_inv));
        if (v != Complex(0)) g.emplace_back(c, v);
      }
      if (g.empty()) continue;
      for (std::size_t s = 0; s < na; ++s) {
        Complex acc = 0;
        for (const auto& [c, v] : g) {
          std::uint64_t phase = 0;
          for (std::size_t k = 0; k < rank; ++k)
            phase += static_cast<std::uint64_t>(coords[s * rank + k]) * coords[c * rank + k] * scale[k];
          acc += v * roots[phase % period];
        }
        blocks[s](static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m * acc;
      }
    }
  }
  return blocks;
}

HermitianEigen hermitian_eigen(const Matrix& a, bool vectors) {
  const int options = vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly;
  Eigen::SelfAdjointEigenSolver<Matrix> es(a, options);
  if (es.info() == Eigen::Success) return {es.eigenvalues(), vectors ? es.eigenvectors() : Matrix()};
  for (std::uint64_t attempt = 0; attempt < 4; ++attempt) {
    std::vector<int> order(static_cast<std::size_t>(a.rows()));
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL + attempt);
    std::shuffle(order.begin(), order.end(), rng);
    Eigen::PermutationMatrix<Eigen::Dynamic> P(a.rows());
    for (std::size_t i = 0; i < order.size(); ++i) P.indices()[static_cast<Eigen::Index>(i)] = order[i];
    const Matrix permuted = P * a * P.transpose();
    es.compute(permuted, options);
    if (es.info() == Eigen::Success) return {es.eigenvalues(), vectors ? Matrix(P.transpose() * es.eigenvectors()) : Matrix()};
  }
  throw NumericError("Hermitian eigensolver failed");
}

namespace {

std::vector<Complex> eigenvalues(const Matrix& a, bool hermitian) {
  std::vector<Complex> out;
  if (hermitian) {
    const auto ev = hermitian_eigen(a, false).values;
    for (Eigen::Index i = 0; i < ev.size(); ++i) out.emplace_back(ev(i), 0.0);
  } else {
    Eigen::ComplexEigenSolver<Matrix> es(a, false);
    if (es.info() != Eigen::Success) throw NumericError("complex eigensolver failed");
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) out.push_back(es.eigenvalues()(i));
  }
  return out;
}

std::vector<Complex> spectrum_with(const FinSuppFun& f, SpectrumPath path, bool hermitian) {
  std::vector<Matrix> blocks;
  if (path != SpectrumPath::dense) blocks = regular_rep_blocks(f);
  if (path == SpectrumPath::blocks && blocks.empty())
    throw ValidationError("spectrum: no abelian block decomposition available");
  std::vector<Complex> out;
  if (blocks.empty()) return eigenvalues(regular_rep(f).matrix, hermitian);
  for (const auto& b : blocks) {
    auto ev = eigenvalues(b, hermitian);
    out.insert(out.end(), ev.begin(), ev.end());
  }
  return out;
}

}  // namespace

std::vector<Complex> spectrum_exact(const FinSuppFun& f, SpectrumPath path) {
  return spectrum_with(f, path, self_adjoint_for_solver(f));
}

std::vector<Complex> spectrum_general(const FinSuppFun& f, SpectrumPath path) { return spectrum_with(f, path, false); }

double spectral_radius(const FinSuppFun& f) {
  double r = 0;
  for (auto z : spectrum_exact(f)) r = std::max(r, std::abs(z));
  return r;
}

std::vector<GelfandReport> gelfand_sequence(const FinSuppFun& f, const std::vector<NormSpec>& norms,
                                            std::size_t kmax) {
  if (kmax > 40) throw ValidationError("gelfand_sequence: kmax must be <= 40");
  const double radius = spectral_radius(f);
  std::vector<GelfandReport> reports(norms.size());
  for (std::size_t j = 0; j < norms.size(); ++j) {
    reports[j].norm = norms[j].tag();
    reports[j].exact_radius = radius;
  }
  FinSuppFun g = f;
  double log_scale = 0;
  bool vanished = f.empty();
  for (std::size_t k = 0; k <= kmax; ++k) {
    const double root = std::ldexp(1.0, -static_cast<int>(k));
    for (std::size_t j = 0; j < norms.size(); ++j) {
      double v = 0;
      if (!vanished) {
        const double nk = norm(g, norms[j]);
        v = nk > 0 ? std::exp((log_scale + std::log(nk)) * root) : 0.0;
      }
      if (!std::isfinite(v)) throw NumericError("gelfand_sequence: overflow despite renormalisation");
      reports[j].values.push_back(v);
    }
    if (k == kmax || vanished) continue;
    FinSuppFun h = convolve(g, g);
    const double s = l1_norm(h);
    if (s == 0) {
      vanished = true;
      continue;
    }
    g = h * Complex(1 / s);
    log_scale = 2 * log_scale + std::log(s);
  }
  for (auto& rep : reports) {
    const double last = rep.values.back();
    rep.final_rel_error = radius > 0 ? std::abs(last - radius) / radius : std::abs(last);
    rep.min_excess = std::numeric_limits<double>::infinity();
    for (double v : rep.values) rep.min_excess = std::min(rep.min_excess, v - radius);
  }
  return reports;
}

USeries u_series(const FinSuppFun& f, Complex t, double tol) {
  if (!(tol > 0)) throw ValidationError("u_series: tol must be > 0");
  const double a = std::abs(t) * l1_norm(f);
  USeries out{FinSuppFun(f.chain()), 0.0, 0};
  if (a == 0) return out;
  auto log_tail = [a](std::size_t K) {
    return static_cast<double>(K + 1) * std::log(a) - std::lgamma(static_cast<double>(K) + 2) + a;
  };
  std::size_t K = 1;
  while (log_tail(K) >= std::log(tol)) ++K;
  const FinSuppFun tf = f * t;
  FinSuppFun term = tf;
  out.value = tf;
  for (std::size_t k = 2; k <= K; ++k) {
    term = convolve(term, tf) * Complex(1.0 / static_cast<double>(k));
    out.value += term;
  }
  out.terms = K;
  out.tail_bound = std::exp(log_tail(K));
  return out;
}

FinSuppFun u_exact(const FinSuppFun& f, Complex t) {
  RegRepMatrix rep = regular_rep(f);
  Matrix e = (t * rep.matrix).exp();
  e -= Matrix::Identity(e.rows(), e.cols());
  rep.matrix = std::move(e);
  return pullback(f.chain(), rep);
}

double unitary_bound(const FinSuppFun& f, const NormSpec& spec) {
  const auto& chain = f.chain();
  return 2 / chain.point_mass() * norm(FinSuppFun::indicator(chain, f.support_level()), spec);
}

GrowthProfile growth_profile(const FinSuppFun& f, double gamma, int N, const NormSpec& spec) {
  if (!(gamma > std::log2(4.0 / 3.0) && gamma < 1))
    throw ValidationError("growth_profile: gamma must lie in (log2(4/3), 1)");
  if (!self_adjoint_for_solver(f)) throw ValidationError("growth_profile: f must be self-adjoint");
  GrowthProfile p;
  p.unitary_bound = unitary_bound(f, spec);
  for (int n = 0; n <= N; ++n) {
    GrowthRow row;
    row.n = n;
    row.envelope = std::exp(2 * std::pow(static_cast<double>(n), gamma));
    row.value = n == 0 ? 0.0 : norm(u_exact(f, Complex(0, n)), spec);
    p.fitted_constant = std::max(p.fitted_constant, row.value / row.envelope);
    if (row.value > p.unitary_bound * (1 + 1e-9)) p.within_unitary_bound = false;
    p.rows.push_back(row);
  }
  return p;
}

InequalityReport inequality_suite(const GroupChain& chain, std::size_t level, const YoungFunction& phi,
                                  const Weight& omega, std::size_t samples, std::uint64_t seed) {
  InequalityReport rep;
  rep.samples = samples;
  rep.exploratory = !omega.subadditive_max_form().has_value();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, chain.order(level) - 1);
  const NormSpec norms[] = {NormSpec::luxemburg(phi), NormSpec::orlicz(phi)};
  for (std::size_t s = 0; s < samples; ++s) {
    const FinSuppFun f = random_function(chain, level, rng);
    const FinSuppFun g = random_function(chain, level, rng);
    const Element x{pick(rng)};
    const FinSuppFun fg = convolve(f, g);
    const FinSuppFun lx = left_translate(f, x);
    const double f1 = l1_norm(f), g1 = l1_norm(g), f1w = l1_norm(f, &omega);
    for (const auto& spec : norms) {
      auto N = [&](const FinSuppFun& h) {
        return spec.kind == NormKind::luxemburg ? luxemburg_norm(h, *spec.young, &omega)
                                                : orlicz_norm(h, *spec.young, &omega);
      };
      const double nfg = N(fg), nf = N(f), ng = N(g);
      rep.max_r2 = std::max(rep.max_r2, nfg / (f1 * ng + nf * g1));
      rep.max_r3 = std::max(rep.max_r3, nfg / (f1w * ng));
      rep.max_rL = std::max(rep.max_rL, N(lx) / (omega(x) * nf));
    }
  }
  rep.r3_ok = rep.max_r3 <= 1 + 1e-9;
  rep.rL_ok = rep.max_rL <= 1 + 1e-9;
  return rep;
}

std::pair<double, double> radial_majorant_check(const FinSuppFun& f, const Weight& omega, std::uint64_t n) {
  if (n == 0) throw ValidationError("radial_majorant_check: n must be >= 1");
  const auto& chain = f.chain();
  const std::size_t L = chain.levels();
  const double left = f.empty() ? 0.0 : l1_norm(convolution_power(f, n), &omega);

  std::vector<double> a(L + 1, 0.0);
  const double m = chain.point_mass();
  for (const auto& [x, v] : f) a[chain.level_of(x)] += m * std::abs(v);
  // Positions >= L share the weight omega'(L) and are lumped into bucket L.
  auto conv = [L](const std::vector<double>& p, const std::vector<double>& q) {
    std::vector<double> r(L + 1, 0.0);
    for (std::size_t i = 0; i <= L; ++i)
      if (p[i] != 0)
        for (std::size_t j = 0; j <= L; ++j) r[std::min(i + j, L)] += p[i] * q[j];
    return r;
  };
  std::vector<double> result(L + 1, 0.0), base = a;
  result[0] = 1;
  for (std::uint64_t k = n;;) {
    if (k & 1) result = conv(result, base);
    k >>= 1;
    if (!k) break;
    base = conv(base, base);
  }
  const UniformGrsWeight wp = uniform_grs_weight(omega);
  double right = 0;
  for (std::size_t j = 0; j <= L; ++j) right += result[j] * wp(static_cast<std::int64_t>(j));
  return {left, right};
}

FinSuppFun random_function(const GroupChain& chain, std::size_t level, std::mt19937_64& rng, bool complex_values) {
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<Complex> v(chain.order(level));
  for (auto& c : v) {
    const double re = u(rng);
    const double im = complex_values ? u(rng) : 0.0;
    c = Complex(re, im);
  }
  return FinSuppFun::from_dense(chain, level, v);
}

FinSuppFun random_self_adjoint(const GroupChain& chain, std::size_t level, std::mt19937_64& rng) {
  const FinSuppFun c = random_function(chain, level, rng);
  return (c + involution(c)) * Complex(0.5);
}

}  // namespace orlab
