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

#include "su11g/verification.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "su11g/error.hpp"
#include "su11g/orthopoly.hpp"
#include "su11g/realization.hpp"
#include "su11g/specfun.hpp"
#include "su11g/wavefunctions.hpp"

namespace su11g {

namespace {

using nlohmann::json;
constexpr double kPi = std::numbers::pi;

std::string num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

double lgam(double v) { return std::lgamma(v); }

ParamRecord record(double a, double b, double c) { return {a, c, (2 * a - 1) * (2 * c - 1), b}; }

double update_max(double cur, double v) {
  // NaN poisons the maximum so that it can never pass.
  if (std::isnan(v) || std::isnan(cur)) return std::numeric_limits<double>::quiet_NaN();
  return std::max(cur, v);
}

std::vector<double> uniform_grid(double lo, double hi, double step) {
  std::vector<double> g;
  const int count = static_cast<int>(std::floor((hi - lo) / step + 1e-9));
  g.reserve(static_cast<std::size_t>(count) + 1);
  for (int k = 0; k <= count; ++k) g.push_back(lo + k * step);
  return g;
}

}  // namespace

VerificationReport make_report(std::string check_id, const ParamRecord& params, std::string scale, double residual,
                               double tolerance, std::string notes) {
  VerificationReport r;
  r.check_id = std::move(check_id);
  r.params = params;
  r.scale = std::move(scale);
  r.residual = residual;
  r.tolerance = tolerance;
  r.passed = residual <= tolerance;  // false for NaN
  r.notes = std::move(notes);
  return r;
}

namespace {

json report_json(const VerificationReport& r) {
  json j;
  j["check_id"] = r.check_id;
  j["params"] = {{"a", r.params.a}, {"c", r.params.c}, {"gamma", r.params.gamma}, {"b", r.params.b}};
  j["scale"] = r.scale;
  // nlohmann writes non-finite numbers as null.
  j["residual"] = r.residual;
  j["tolerance"] = r.tolerance;
  j["passed"] = r.passed;
  j["notes"] = r.notes;
  return j;
}

double number_or_nan(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

}  // namespace

std::string to_json(const VerificationReport& report) { return report_json(report).dump(); }

VerificationReport report_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw IoError(std::string("report_from_json: ") + e.what());
  }
  try {
    VerificationReport r;
    r.check_id = j.at("check_id").get<std::string>();
    const json& p = j.at("params");
    r.params = {p.at("a").get<double>(), p.at("c").get<double>(), p.at("gamma").get<double>(),
                p.at("b").get<double>()};
    r.scale = j.at("scale").get<std::string>();
    r.residual = number_or_nan(j.at("residual"));
    r.tolerance = number_or_nan(j.at("tolerance"));
    r.passed = j.at("passed").get<bool>();
    r.notes = j.at("notes").get<std::string>();
    return r;
  } catch (const json::exception& e) {
    throw IoError(std::string("report_from_json: ") + e.what());
  }
}

// --- orthonormality -----------------------------------------------------

GramResult gram_matrix(int nmax, const ModelParams& p, const QuadratureSpec& spec, PsiRoute route,
                       double tolerance) {
  if (nmax < 0) throw DomainError("gram_matrix: nmax must be >= 0");
  if (p.b_deformed()) throw DomainError("gram_matrix: requires b = 0");

  // Only same-parity pairs m <= n are integrated; every product is even.
  std::vector<std::pair<int, int>> pairs;
  for (int n = 0; n <= nmax; ++n)
    for (int m = n % 2; m <= n; m += 2) pairs.emplace_back(m, n);

  const VectorIntegrand f = [&](double x, std::span<double> out) {
    std::vector<double> psi;
    if (route == PsiRoute::recurrence && nmax >= 1) {
      psi = psi_vector(x, nmax, p);
    } else {
      psi.resize(static_cast<std::size_t>(nmax) + 1);
      for (int n = 0; n <= nmax; ++n) psi[n] = psi_closed(n, x, p);
    }
    for (std::size_t k = 0; k < pairs.size(); ++k) out[k] = psi[pairs[k].first] * psi[pairs[k].second];
  };
  const double degree = 2.0 * nmax + 2.0 * p.a() + 2.0 * p.c();
  const QuadratureResult q = integrate_real_line(f, pairs.size(), Symmetry::even, degree, spec);

  GramResult res;
  res.matrix = Eigen::MatrixXd::Zero(nmax + 1, nmax + 1);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [m, n] = pairs[k];
    res.matrix(m, n) = q.values[k];
    res.matrix(n, m) = q.values[k];
  }
  res.error_estimate = q.error_estimate;
  const double residual = (res.matrix - Eigen::MatrixXd::Identity(nmax + 1, nmax + 1)).cwiseAbs().maxCoeff();
  std::ostringstream notes;
  notes << "route=" << (route == PsiRoute::recurrence ? "recurrence" : "closed") << "; L=" << q.halfwidth
        << "; panels=" << q.panel_evaluations << "; quadrature_error=" << q.error_estimate;
  res.report = make_report("gram[nmax=" + std::to_string(nmax) + "]", ParamRecord::of(p),
                           "m,n in [0," + std::to_string(nmax) + "]; x over the real line", residual, tolerance,
                           notes.str());
  return res;
}

// --- continuous dual Hahn orthogonality ---------------------------------

double cdh_orth_weight(double x, double a, double b, double c, WeightForm form) {
  const double ax = std::abs(x);
  if (form == WeightForm::via_w) {
    const double w = std::exp(2.0 * log_sqrt_weight(ax, a, c));
    if (b == 0.0) return 2.0 * w;
    if (b == 1.0) return 2.0 * ax * ax * w;
    throw DomainError("cdh_orth_weight: the w-based form exists only for b = 0 and b = 1");
  }
  // |Gamma(2ix)|^2 = |Gamma(1+2ix)|^2 / (4x^2); for b = 0 also x^2 |Gamma(ix)|^2 = |Gamma(1+ix)|^2.
  double lw = -std::log(2.0 * kPi) + 2.0 * (log_abs_gamma({a, ax}) + log_abs_gamma({c, ax}) -
                                            log_abs_gamma({1.0, 2.0 * ax}));
  if (b == 0.0) {
    lw += 2.0 * log_abs_gamma({1.0, ax}) + std::log(4.0);
  } else {
    if (ax == 0.0) return 0.0;
    lw += 2.0 * log_abs_gamma({b, ax}) + std::log(4.0 * ax * ax);
  }
  return std::exp(lw);
}

double cdh_orthogonality_integral(int m, int n, double a, double b, double c, const QuadratureSpec& spec,
                                  WeightForm form) {
  if (!(a > 0.0) || !(c > 0.0) || !(b >= 0.0)) throw DomainError("cdh_orthogonality: need a, c > 0 and b >= 0");
  if (m < 0 || n < 0) throw DomainError("cdh_orthogonality: negative degree");
  const auto f = [&](double x) {
    const double x2 = x * x;
    return cdh_orth_weight(x, a, b, c, form) * cdh({m, x2, a, b, c}) * cdh({n, x2, a, b, c});
  };
  const double degree = 2.0 * (a + b + c) + 4.0 * std::max(m, n);
  // Even integrand: half of the real-line integral is the half-line one.
  return 0.5 * integrate_real_line(f, Symmetry::even, degree, spec);
}

VerificationReport cdh_orthogonality(int m, int n, double a, double b, double c, const QuadratureSpec& spec,
                                     WeightForm form, double tolerance) {
  const double integral = cdh_orthogonality_integral(m, n, a, b, c, spec, form);
  const auto log_norm = [&](int k) { return lgam(k + a + b) + lgam(k + a + c) + lgam(k + b + c) + lgam(k + 1.0); };
  const double scale = std::exp(0.5 * (log_norm(m) + log_norm(n)));
  const double target = m == n ? scale : 0.0;
  const double residual = std::abs(integral - target) / scale;
  std::ostringstream id;
  id << "cdh_orth[m=" << m << ",n=" << n << ",b=" << num(b)
     << (form == WeightForm::via_w ? ",form=w" : ",form=gamma") << "]";
  std::ostringstream notes;
  notes << "integral=" << integral << "; normalization=" << scale;
  return make_report(id.str(), record(a, b, c), "half line x > 0; residual relative to sqrt(N_m N_n)", residual,
                     tolerance, notes.str());
}

// --- completeness -------------------------------------------------------

double completeness_kernel(double x, double y, int n_terms, const ModelParams& p) {
  if (n_terms <= 0) return 0.0;
  const int top = std::max(n_terms - 1, 1);
  const auto px = psi_vector(x, top, p);
  const auto py = psi_vector(y, top, p);
  double k = 0.0;
  for (int n = 0; n < n_terms; ++n) k += px[n] * py[n];
  return k;
}

CompletenessResult delta_completeness(double x, double center, int nmax, const ModelParams& p, double width,
                                      const QuadratureSpec& spec) {
  if (!(width > 0.0)) throw DomainError("delta_completeness: width must be positive");
  CompletenessResult res;
  for (int size : {8, 16, 32, 64})
    if (size <= nmax) res.sizes.push_back(size);
  if (res.sizes.empty()) res.sizes.push_back(std::max(nmax, 1));
  const int top = res.sizes.back();

  const auto g = [&](double y) {
    const double t = (y - center) / width;
    return std::exp(-0.5 * t * t);
  };
  // c_n = int psi_n(y) g(y) dy for n < top, all in one vector quadrature.
  const VectorIntegrand f = [&](double y, std::span<double> out) {
    const auto psi = psi_vector(y, std::max(top - 1, 1), p);
    const double gy = g(y);
    for (int n = 0; n < top; ++n) out[n] = psi[n] * gy;
  };
  const double degree = 2.0 * top + 2.0 * p.a() + 2.0 * p.c();
  const auto coeffs = integrate_real_line(f, static_cast<std::size_t>(top), Symmetry::none, degree, spec).values;

  const auto px = psi_vector(x, std::max(top - 1, 1), p);
  for (int size : res.sizes) {
    double s = 0.0;
    for (int n = 0; n < size; ++n) s += px[n] * coeffs[n];
    res.errors.push_back(std::abs(s - g(x)));
  }

  double worst_ratio = 0.0;
  for (std::size_t k = 1; k < res.errors.size(); ++k)
    worst_ratio = update_max(worst_ratio, res.errors[k] / res.errors[k - 1]);
  std::ostringstream seq;
  for (std::size_t k = 0; k < res.sizes.size(); ++k)
    seq << (k ? ", " : "") << "N=" << res.sizes[k] << ": " << res.errors[k];
  std::ostringstream scale;
  scale << "x=" << x << ", gaussian center=" << center << ", width=" << width;
  const auto rec = ParamRecord::of(p);
  res.reports.push_back(make_report("completeness.monotone", rec, scale.str(), worst_ratio, 1.1,
                                    "max ratio of consecutive errors; " + seq.str()));
  res.reports.push_back(
      make_report("completeness.final", rec, scale.str(), res.errors.back(), 1e-3, "errors: " + seq.str()));
  return res;
}

// --- limits -------------------------------------------------------------

std::vector<double> paraboson_ladder(int n, double a, const LimitOptions& opts) {
  const auto grid = uniform_grid(opts.xi_lo, opts.xi_hi, opts.xi_step);
  std::vector<double> errs;
  for (double c : opts.c_ladder) {
    const auto p = make_params(a, c);
    const double sc = std::sqrt(c), qc = std::pow(c, 0.25);
    double worst = 0.0;
    for (double xi : grid) worst = update_max(worst, std::abs(qc * psi_closed(n, sc * xi, p) - psi_paraboson(n, xi, a)));
    errs.push_back(worst);
  }
  return errs;
}

std::vector<VerificationReport> limit_suite(LimitKind kind, std::span<const double> a_values,
                                            const LimitOptions& opts) {
  std::vector<VerificationReport> out;
  if (kind == LimitKind::c_half) {
    const auto grid = uniform_grid(-opts.x_half_range, opts.x_half_range, opts.x_step);
    for (double a : a_values) {
      const auto p = make_params(a, 0.5);
      for (int n = 0; n <= opts.max_level_c_half; ++n) {
        double worst = 0.0;
        for (double x : grid) worst = update_max(worst, std::abs(psi_closed(n, x, p) - phi_mp_fn(n, x, a)));
        out.push_back(make_report("limits.c_half[a=" + num(a) + ",n=" + std::to_string(n) + "]",
                                  ParamRecord::of(p), "x in [-" + num(opts.x_half_range) + ", " +
                                  num(opts.x_half_range) + "] step " + num(opts.x_step),
                                  worst, opts.c_half_tolerance, "sup |psi_n(c=1/2) - phi_n|"));
      }
    }
    return out;
  }

  std::ostringstream ladder_desc;
  for (std::size_t k = 0; k < opts.c_ladder.size(); ++k) ladder_desc << (k ? "," : "") << opts.c_ladder[k];
  const std::string scale = "xi in [" + num(opts.xi_lo) + ", " + num(opts.xi_hi) + "] step " + num(opts.xi_step) +
                            "; c in {" + ladder_desc.str() + "}";
  for (double a : a_values) {
    const ParamRecord rec = record(a, 0.0, opts.c_ladder.back());
    for (int n = 0; n <= opts.max_level_c_infinity; ++n) {
      const auto errs = paraboson_ladder(n, a, opts);
      double worst_ratio = 0.0;
      for (std::size_t k = 1; k < errs.size(); ++k) worst_ratio = update_max(worst_ratio, errs[k] / errs[k - 1]);
      std::ostringstream seq;
      for (std::size_t k = 0; k < errs.size(); ++k) seq << (k ? ", " : "") << errs[k];
      const std::string tag = "[a=" + num(a) + ",n=" + std::to_string(n) + "]";
      // Strict decrease: every ratio must stay below 1.
      out.push_back(make_report("limits.c_infinity.monotone" + tag, rec, scale, worst_ratio,
                                std::nextafter(1.0, 0.0), "ladder errors: " + seq.str()));
      out.push_back(make_report("limits.c_infinity.final" + tag, rec, scale, errs.back(), opts.c_infinity_bound,
                                "ladder errors: " + seq.str()));
    }
    if (a == 0.5) {
      const double c = opts.c_ladder.back();
      const auto p = make_params(0.5, c);
      double worst = 0.0;
      for (double xi : uniform_grid(opts.xi_lo, opts.xi_hi, opts.xi_step)) {
        const double canon = std::pow(kPi, -0.25) * std::exp(-0.5 * xi * xi);
        worst = update_max(worst, std::abs(std::pow(c, 0.25) * psi_closed(0, std::sqrt(c) * xi, p) - canon));
      }
      out.push_back(make_report("limits.c_infinity.canonical_ground", ParamRecord::of(p), scale, worst, 1e-2,
                                "target pi^{-1/4} exp(-xi^2/2)"));
    }
  }
  return out;
}

// --- b-deformed recurrences ---------------------------------------------

BDeformResiduals b_deformed_residual(int n, double x, const ModelParams& p) {
  if (n < 0) throw DomainError("b_deformed_residual: negative index");
  const auto A = [&](int k) { return k < 0 ? WaveValue{} : formal_coeff(k, x, p); };
  const WaveValue am = A(2 * n - 1), a0 = A(2 * n), a1 = A(2 * n + 1), a2 = A(2 * n + 2);
  const double bm = n > 0 ? q_offdiag(2 * n - 1, p) : 0.0;
  const double b0 = q_offdiag(2 * n, p), b1 = q_offdiag(2 * n + 1, p);

  // x A_{2n} = beta_{2n} A_{2n+1} + beta_{2n-1} A_{2n-1}
  const double r1 = x * a0.value - b0 * a1.value - bm * am.value;
  const double s1 = std::max({std::abs(x) * a0.scale, b0 * a1.scale, bm * am.scale});
  // x A_{2n+1} = beta_{2n+1} A_{2n+2} + beta_{2n} A_{2n}
  const double r2 = x * a1.value - b1 * a2.value - b0 * a0.value;
  const double s2 = std::max({std::abs(x) * a1.scale, b1 * a2.scale, b0 * a0.scale});
  const auto rel = [](double r, double s) { return s > 0.0 ? std::abs(r) / s : std::abs(r); };
  return {rel(r1, s1), rel(r2, s2)};
}

}  // namespace su11g
