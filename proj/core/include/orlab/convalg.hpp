// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "orlab/function.hpp"
#include "orlab/orlicz_norms.hpp"
#include "orlab/weights.hpp"
#include "orlab/young.hpp"

namespace orlab {

using Matrix = Eigen::MatrixXcd;

/// (f * g)(x) = m sum_y f(y) g(y^{-1} x).
FinSuppFun convolve(const FinSuppFun& f, const FinSuppFun& g);
/// f^{*n}, n >= 1, by binary powering.
FinSuppFun convolution_power(const FinSuppFun& f, std::uint64_t n);
/// f*(x) = conj(f(x^{-1})).
FinSuppFun involution(const FinSuppFun& f);
bool is_self_adjoint(const FinSuppFun& f, double tol = 0);
/// (L_x f)(y) = f(x^{-1} y).
FinSuppFun left_translate(const FinSuppFun& f, Element x);

/// Matrix of left convolution by f on functions over K_level:
/// entry (x, y) = m f(x y^{-1}).
struct RegRepMatrix {
  std::size_t level = 0;
  Matrix matrix;
};

/// level 0 selects the support level of f.
RegRepMatrix regular_rep(const FinSuppFun& f, std::size_t level = 0);
/// f(x) = M(x, e) / m.
FinSuppFun pullback(const GroupChain& chain, const RegRepMatrix& rep);

/// Blocks of a unitary block-diagonalisation of regular_rep(f) at the
/// support level, one block per character of an abelian subgroup. Empty
/// when the catalog provides no usable subgroup.
std::vector<Matrix> regular_rep_blocks(const FinSuppFun& f);

struct HermitianEigen {
  Eigen::VectorXd values;
  /// Columns are eigenvectors; empty unless requested.
  Matrix vectors;
};

/// Hermitian eigendecomposition. When the tridiagonal QR stalls (it does on
/// some highly degenerate regular representations) the solve is repeated on
/// a fixed symmetric permutation of the matrix.
HermitianEigen hermitian_eigen(const Matrix& a, bool vectors);

enum class SpectrumPath { automatic, blocks, dense };

/// Eigenvalues of regular_rep(f) at the support level. Self-adjoint f uses
/// a Hermitian solver (real output); other f the general complex solver.
std::vector<Complex> spectrum_exact(const FinSuppFun& f, SpectrumPath path = SpectrumPath::automatic);
/// Same matrix, always through the general (non-Hermitian) complex solver.
std::vector<Complex> spectrum_general(const FinSuppFun& f, SpectrumPath path = SpectrumPath::automatic);
double spectral_radius(const FinSuppFun& f);

struct GelfandReport {
  std::string norm;
  /// ||f^{*2^k}||^{2^{-k}}, k = 0 .. kmax.
  std::vector<double> values;
  double exact_radius = 0;
  double final_rel_error = 0;
  /// min_k values[k] - exact_radius.
  double min_excess = 0;
};

/// Repeated squaring with L^1 renormalisation; one report per norm.
std::vector<GelfandReport> gelfand_sequence(const FinSuppFun& f, const std::vector<NormSpec>& norms,
                                            std::size_t kmax);

struct USeries {
  FinSuppFun value;
  /// Certified L^1 bound on the omitted tail.
  double tail_bound = 0;
  std::size_t terms = 0;
};

/// sum_{k >= 1} (t f)^{*k} / k!, truncated once (|t| ||f||_1)^{K+1}/(K+1)! e^{|t| ||f||_1} < tol.
USeries u_series(const FinSuppFun& f, Complex t, double tol);
/// Pullback of exp(t regular_rep(f)) - I.
FinSuppFun u_exact(const FinSuppFun& f, Complex t);

/// B_K = (2/m) ||chi_K|| in the given norm, K the support level of f.
double unitary_bound(const FinSuppFun& f, const NormSpec& norm);

struct GrowthRow {
  int n = 0;
  double value = 0;
  double envelope = 0;
};

struct GrowthProfile {
  std::vector<GrowthRow> rows;
  /// max_n ||u(inf)|| e^{-2 n^gamma}.
  double fitted_constant = 0;
  double unitary_bound = 0;
  bool within_unitary_bound = true;
};

/// ||u(inf)|| for n = 0 .. N with u_exact.
GrowthProfile growth_profile(const FinSuppFun& f, double gamma, int N, const NormSpec& norm);

struct InequalityReport {
  std::size_t samples = 0;
  /// max ||f*g|| / (||f||_1 ||g|| + ||f|| ||g||_1): fitted constant.
  double max_r2 = 0;
  /// max ||f*g|| / (||f||_{1,w} ||g||).
  double max_r3 = 0;
  /// max ||L_x f|| / (w(x) ||f||).
  double max_rL = 0;
  bool r3_ok = true;
  bool rL_ok = true;
  /// The weight carries no sub-additivity constant.
  bool exploratory = false;
};

/// Random pairs f, g in C[K_level] and points x, in both the Luxemburg and
/// the Orlicz norm of f omega.
InequalityReport inequality_suite(const GroupChain& chain, std::size_t level, const YoungFunction& phi,
                                  const Weight& omega, std::size_t samples, std::uint64_t seed);

/// (||f^{*n}||_{L^1(omega)}, ||a^{*n}||_{l^1(Z, omega')}) with a_i the mass of |f| on shell i.
std::pair<double, double> radial_majorant_check(const FinSuppFun& f, const Weight& omega, std::uint64_t n);

/// Uniform entries in [-1, 1] (+ i[-1, 1] when complex) on K_level.
FinSuppFun random_function(const GroupChain& chain, std::size_t level, std::mt19937_64& rng,
                           bool complex_values = true);
/// (c + c*) / 2 for a random c on K_level.
FinSuppFun random_self_adjoint(const GroupChain& chain, std::size_t level, std::mt19937_64& rng);

}  // namespace orlab
