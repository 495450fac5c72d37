/*
 * Copyright 2026 The su11g Authors. All Rights Reserved
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SU11G_VERIFICATION_HPP
#define SU11G_VERIFICATION_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "su11g/quadrature.hpp"
#include "su11g/repalgebra.hpp"

namespace su11g {

struct ParamRecord {
  double a = 0.0;
  double c = 0.0;
  double gamma = 0.0;
  double b = 0.0;

  static ParamRecord of(const ModelParams& p) { return {p.a(), p.c(), p.gamma(), p.b()}; }
};

/// One pass/fail record. passed == (residual <= tolerance); a NaN residual fails.
struct VerificationReport {
  std::string check_id;
  ParamRecord params;
  std::string scale;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string notes;
};

VerificationReport make_report(std::string check_id, const ParamRecord& params, std::string scale, double residual,
                               double tolerance, std::string notes = {});

/// Serialized with exactly the fields check_id, params{a,c,gamma,b}, scale,
/// residual, tolerance, passed, notes. Non-finite residuals become null.
std::string to_json(const VerificationReport& report);
VerificationReport report_from_json(std::string_view text);

enum class PsiRoute { closed, recurrence };

struct GramResult {
  Eigen::MatrixXd matrix;
  double error_estimate = 0.0;
  VerificationReport report;
};

/// G_{mn} = integral of psi_m psi_n over the real line, m, n <= nmax. Pairs of
/// opposite parity are exactly zero. Report residual = max |G - I|.
GramResult gram_matrix(int nmax, const ModelParams& p, const QuadratureSpec& spec = {},
                       PsiRoute route = PsiRoute::recurrence, double tolerance = 1e-8);

/// Two evaluations of the continuous dual Hahn orthogonality weight
/// (1/2pi) |Gamma(a+ix) Gamma(b+ix) Gamma(c+ix) / Gamma(2ix)|^2:
/// gamma_quotient evaluates it as written (through Gamma(2ix) = Gamma(1+2ix)/(2ix));
/// via_w uses 2 w(x) for b = 0 and 2 x^2 w(x) for b = 1 (other b: DomainError).
enum class WeightForm { gamma_quotient, via_w };

double cdh_orth_weight(double x, double a, double b, double c, WeightForm form);

/// Checks int_0^inf weight S_m S_n dx = delta_{mn} Gamma(n+a+b) Gamma(n+a+c)
/// Gamma(n+b+c) n!. Residual is the discrepancy divided by sqrt(norm_m norm_n).
VerificationReport cdh_orthogonality(int m, int n, double a, double b, double c, const QuadratureSpec& spec = {},
                                     WeightForm form = WeightForm::gamma_quotient, double tolerance = 1e-8);

/// Value of the raw half-line integral used by cdh_orthogonality.
double cdh_orthogonality_integral(int m, int n, double a, double b, double c, const QuadratureSpec& spec,
                                  WeightForm form);

/// K_N(x, y) = sum_{n<N} psi_n(x) psi_n(y).
double completeness_kernel(double x, double y, int n_terms, const ModelParams& p);

struct CompletenessResult {
  std::vector<int> sizes;
  std::vector<double> errors;
  /// completeness.monotone (each error <= 1.1 x previous) and
  /// completeness.final (last error <= 1e-3).
  std::vector<VerificationReport> reports;
};

/// Smeared form of the Dirac-delta completeness: for the Gaussian
/// g(y) = exp(-(y - center)^2 / (2 width^2)), compares int K_N(x, y) g(y) dy
/// with g(x) for N in {8, 16, 32, 64} capped at nmax.
CompletenessResult delta_completeness(double x, double center, int nmax, const ModelParams& p, double width,
                                      const QuadratureSpec& spec = {});

enum class LimitKind { c_half, c_infinity };

struct LimitOptions {
  int max_level_c_half = 10;
  int max_level_c_infinity = 6;
  std::vector<double> c_ladder = {1e2, 1e3, 1e4};
  double x_half_range = 8.0;
  double x_step = 0.1;
  double xi_lo = 0.25;
  double xi_hi = 4.0;
  double xi_step = 0.05;
  double c_half_tolerance = 1e-10;
  /// Frozen from the first ladder run (worst final error 4.2e-4 at c = 1e4).
  double c_infinity_bound = 1e-3;
};

/// sup over the xi grid of |c^{1/4} psi_n^{(a,c)}(sqrt(c) xi) - Psi_n^{(a)}(xi)|,
/// one entry per rung of the ladder.
std::vector<double> paraboson_ladder(int n, double a, const LimitOptions& opts = {});

/// c_half: sup_x |psi_n^{(a,1/2)} - phi_n^{(a)}| per (a, n).
/// c_infinity: ladder monotonicity and final bound per (a, n); for a = 1/2 also
/// the n = 0 comparison with the canonical ground state pi^{-1/4} e^{-xi^2/2}.
std::vector<VerificationReport> limit_suite(LimitKind kind, std::span<const double> a_values,
                                            const LimitOptions& opts = {});

struct BDeformResiduals {
  double r1 = 0.0;
  double r2 = 0.0;
};

/// Relative residuals of the two b-deformed position recurrences at index
/// 2n and 2n+1, with the closed-form formal solution substituted.
BDeformResiduals b_deformed_residual(int n, double x, const ModelParams& p);

// --- suite runner -------------------------------------------------------

enum class Suite { gram, commutators, diff_relations, realization, limits, cdh_orth, b_deform };

std::string_view suite_name(Suite s);
std::vector<Suite> all_suites();

struct VerifyOptions {
  int nmax = 16;
  double gram_tolerance = 1e-8;
  double commutator_tolerance = 1e-12;
  double diff_tolerance = 1e-9;
  double realization_tolerance = 1e-10;
  double generating_tolerance = 1e-8;
  double cdh_tolerance = 1e-8;
  double b_deform_tolerance = 1e-9;
  bool parallel = true;
  std::uint64_t seed = 20120511;
  QuadratureSpec quadrature{};
  LimitOptions limits{};
};

struct SuiteResult {
  std::string name;
  std::vector<VerificationReport> reports;

  bool passed() const;
};

SuiteResult run_suite(Suite suite, const ModelParams& p, const VerifyOptions& opts = {});

/// Runs every suite (concurrently unless opts.parallel is false); the result
/// order is fixed regardless of completion order.
std::vector<SuiteResult> run_verification(const ModelParams& p, const VerifyOptions& opts = {});

std::string suites_to_json(const ModelParams& p, const std::vector<SuiteResult>& suites);

}  // namespace su11g

#endif  // SU11G_VERIFICATION_HPP
