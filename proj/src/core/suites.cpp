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

#include <algorithm>
#include <cmath>
#include <complex>
#include <future>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "json.hpp"
#include "su11g/error.hpp"
#include "su11g/orthopoly.hpp"
#include "su11g/realization.hpp"
#include "su11g/specfun.hpp"
#include "su11g/verification.hpp"
#include "su11g/wavefunctions.hpp"

namespace su11g {

namespace {

using Mat = Eigen::MatrixXcd;
const std::complex<double> kI(0.0, 1.0);

std::string num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

double worse(double cur, double v) {
  if (std::isnan(v) || std::isnan(cur)) return std::numeric_limits<double>::quiet_NaN();
  return std::max(cur, v);
}

ModelParams undeformed_b(const ModelParams& p) { return make_params(p.a(), p.c()); }

// Ground-state value and peak scan; the scan is informational only.
VerificationReport ground_state_report(const ModelParams& p) {
  const double psi0 = psi_closed(0, 0.0, p);
  const double beta = std::exp(std::lgamma(p.a()) + std::lgamma(p.c()) - std::lgamma(p.a() + p.c()));
  const double target = beta / std::numbers::pi;
  const double residual = std::abs(psi0 * psi0 - target) / target;

  int best_n = 0;
  double best_x = 0.0, best = -1.0;
  for (int n = 0; n <= 10; ++n) {
    for (int k = 0; k <= 400; ++k) {
      const double x = -10.0 + 0.05 * k;
      const double v = psi_closed(n, x, p);
      if (v * v > best) {
        best = v * v;
        best_n = n;
        best_x = x;
      }
    }
  }
  std::ostringstream notes;
  notes << "psi0(0)^2=" << psi0 * psi0 << "; B(a,c)/pi=" << target
        << "; physically_acceptable=" << (p.physically_acceptable() ? "true" : "false")
        << "; peak scan n<=10, x in [-10,10]: max |psi_n|^2 at (n,x)=(" << best_n << "," << best_x << ")"
        << (best_n == 0 && best_x == 0.0 ? ", at the origin" : ", away from the origin");
  return make_report("ground.psi0_at_origin", ParamRecord::of(p), "x=0", residual, 1e-12, notes.str());
}

std::vector<VerificationReport> gram_suite(const ModelParams& p, const VerifyOptions& o) {
  const auto q = undeformed_b(p);
  std::vector<VerificationReport> out;
  out.push_back(gram_matrix(o.nmax, q, o.quadrature, PsiRoute::recurrence, o.gram_tolerance).report);
  out.push_back(ground_state_report(q));
  return out;
}

std::vector<VerificationReport> commutator_suite(const ModelParams& p, const VerifyOptions& o) {
  constexpr int kDim = 40;
  constexpr int kInterior = 38;
  const auto op = [&](OperatorKind k) { return build_operator(k, p, kDim); };
  const auto R = op(OperatorKind::R), J0 = op(OperatorKind::J0), Jp = op(OperatorKind::Jplus),
             Jm = op(OperatorKind::Jminus), Q = op(OperatorKind::Q), P = op(OperatorKind::P),
             H = op(OperatorKind::H);
  const Mat zero = Mat::Zero(kDim, kDim);
  const auto rec = ParamRecord::of(p);
  const std::string scale = "N=40, interior 38x38 block";
  const double tol = o.commutator_tolerance;

  std::vector<VerificationReport> out;
  const auto add = [&](const char* id, double r, const char* notes) {
    out.push_back(make_report(id, rec, scale, r, tol, notes));
  };
  add("commutator.H_q", commutator_residual(H, Q, (-kI * P.entries()).eval(), kInterior), "[H,q] = -i p");
  add("commutator.H_p", commutator_residual(H, P, (kI * Q.entries()).eval(), kInterior), "[H,p] = i q");
  const Mat rhs = -2.0 * J0.entries() - p.gamma() * R.entries() - 4.0 * p.b() * J0.entries() * R.entries();
  add("commutator.Jplus_Jminus", commutator_residual(Jp, Jm, rhs, kInterior),
      p.b_deformed() ? "[J+,J-] = -2J0 - gamma R - 4b J0 R" : "[J+,J-] = -2J0 - gamma R");
  add("commutator.J0_Jplus", commutator_residual(J0, Jp, Jp.entries(), kInterior), "[J0,J+] = J+");
  add("commutator.J0_Jminus", commutator_residual(J0, Jm, (-Jm.entries()).eval(), kInterior), "[J0,J-] = -J-");
  add("commutator.R_J0", commutator_residual(R, J0, zero, kInterior), "[R,J0] = 0");
  add("anticommutator.R_Jplus", anticommutator_residual(R, Jp, zero, kInterior), "{R,J+} = 0");
  add("anticommutator.R_Jminus", anticommutator_residual(R, Jm, zero, kInterior), "{R,J-} = 0");
  const double adj = std::max((Jp.entries().adjoint() - Jm.entries()).cwiseAbs().maxCoeff(),
                              std::max((Q.entries().adjoint() - Q.entries()).cwiseAbs().maxCoeff(),
                                       (P.entries().adjoint() - P.entries()).cwiseAbs().maxCoeff()));
  add("adjointness", adj, "J+^dagger = J-, q and p Hermitian");
  return out;
}

std::vector<VerificationReport> diff_suite(const ModelParams& p, const VerifyOptions& o) {
  std::vector<VerificationReport> out;
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> level(0, 20);
  std::uniform_real_distribution<double> xs(-5.0, 5.0), par(0.2, 3.0);
  double worst1 = 0.0, worst2 = 0.0;
  for (int t = 0; t < 200; ++t) {
    const int n = level(rng);
    const double x = xs(rng), a = par(rng), b = par(rng), c = par(rng);
    const auto r = cdh_diff_residuals(n, x, a, b, c);
    worst1 = worse(worst1, r.relative1());
    worst2 = worse(worst2, r.relative2());
  }
  const ParamRecord rec = ParamRecord::of(p);
  const std::string rand_scale = "200 random tuples: n<=20, x in [-5,5], a,b,c in [0.2,3]; seed " +
                                 std::to_string(o.seed);
  out.push_back(make_report("diff.first_relation.random", rec, rand_scale, worst1, o.diff_tolerance,
                            "relative to the largest contribution"));
  out.push_back(make_report("diff.second_relation.random", rec, rand_scale, worst2, o.diff_tolerance,
                            "relative to the largest contribution"));

  const auto q = undeformed_b(p);
  const double xs0[] = {0.3, 1.0, 2.0, 4.5};
  double b0 = 0.0, b1 = 0.0;
  for (int n = 0; n <= 20; ++n) {
    for (double x : xs0) {
      const auto r0 = cdh_diff_residuals(n, x, q.a(), 0.0, q.c());
      b0 = worse(b0, std::max(r0.relative1(), r0.relative2()));
      const auto r1 = cdh_diff_residuals(n, x, q.a(), 1.0, q.c());
      b1 = worse(b1, std::max(r1.relative1(), r1.relative2()));
    }
  }
  const std::string pair_scale = "n<=20, x in {0.3, 1, 2, 4.5}";
  out.push_back(make_report("diff.b0_specialization", ParamRecord::of(q), pair_scale, b0, o.diff_tolerance,
                            "difference relations linking (a,0,c) with (a,1,c)"));
  out.push_back(make_report("diff.b1_specialization", ParamRecord::of(q), pair_scale, b1, o.diff_tolerance,
                            "difference relations linking (a,1,c) with (a,2,c)"));

  // Closed form against the recurrence-built sqrt(w) A_n.
  double route = 0.0;
  for (double x : {-3.7, -0.4, 0.0, 0.9, 2.3, 5.1}) {
    const auto rec_v = psi_vector(x, 30, q);
    for (int n = 0; n <= 30; ++n) {
      const auto cl = psi_closed_eval(n, x, q);
      const double s = std::max(std::abs(cl.value), cl.scale);
      route = worse(route, s > 0.0 ? std::abs(cl.value - rec_v[n]) / s : std::abs(cl.value - rec_v[n]));
    }
  }
  out.push_back(make_report("diff.route_agreement", ParamRecord::of(q), "n<=30, x in {-3.7,-0.4,0,0.9,2.3,5.1}",
                            route, o.diff_tolerance, "closed-form psi_n vs recurrence"));
  return out;
}

std::vector<VerificationReport> realization_suite(const ModelParams& p, const VerifyOptions& o) {
  const auto q = undeformed_b(p);
  const auto rec = ParamRecord::of(q);
  std::vector<VerificationReport> out;
  out.push_back(make_report("realization.matrix_elements", rec, "n<=15; J0, J+, J-",
                            realization_consistency(15, q), o.realization_tolerance,
                            "differential-reflection operators on normalized monomials"));
  double gen = 0.0, imag = 0.0;
  for (double z : {0.5, -0.5, 0.9, -0.9}) {
    for (double x : {0.7, -1.3, 2.4}) {
      for (Parity par : {Parity::even, Parity::odd}) {
        const double s = generating_sum(x, z, q, par, 400);
        const auto cf = generating_closed_form(x, z, q, par);
        gen = worse(gen, std::abs(s - cf.real()) / std::max(1.0, std::abs(cf.real())));
        imag = worse(imag, std::abs(cf.imag()) / std::max(1.0, std::abs(cf.real())));
      }
    }
  }
  const std::string scale = "z in {+-0.5, +-0.9}, x in {0.7,-1.3,2.4}, both parities, 401 terms";
  out.push_back(make_report("realization.generating_sum", rec, scale, gen, o.generating_tolerance,
                            "partial sums vs closed forms"));
  out.push_back(make_report("realization.closed_form_reality", rec, scale, imag, 1e-10,
                            "imaginary part of the closed forms"));
  return out;
}

std::vector<VerificationReport> limits_suite(const ModelParams& p, const VerifyOptions& o) {
  const double a[] = {p.a()};
  if (p.c() == 0.5) return limit_suite(LimitKind::c_half, a, o.limits);
  return limit_suite(LimitKind::c_infinity, a, o.limits);
}

std::vector<VerificationReport> cdh_suite(const ModelParams& p, const VerifyOptions& o) {
  std::vector<VerificationReport> out;
  const double a = p.a(), c = p.c();
  for (double b : {0.0, 1.0})
    for (int n = 0; n <= 3; ++n)
      for (int m = 0; m <= n; ++m)
        out.push_back(cdh_orthogonality(m, n, a, b, c, o.quadrature, WeightForm::gamma_quotient, o.cdh_tolerance));
  double worst = 0.0;
  for (double b : {0.0, 1.0}) {
    const double i1 = cdh_orthogonality_integral(1, 1, a, b, c, o.quadrature, WeightForm::gamma_quotient);
    const double i2 = cdh_orthogonality_integral(1, 1, a, b, c, o.quadrature, WeightForm::via_w);
    worst = worse(worst, std::abs(i1 - i2) / std::abs(i1));
  }
  out.push_back(make_report("cdh_orth.weight_forms", ParamRecord::of(p), "m=n=1, b in {0,1}", worst, 1e-9,
                            "gamma-quotient weight vs rewritten w-based weight"));
  return out;
}

std::vector<VerificationReport> b_deform_suite(const ModelParams& p, const VerifyOptions& o) {
  std::vector<double> bs = {0.25, 0.5, 1.0};
  if (p.b_deformed() && std::find(bs.begin(), bs.end(), p.b()) == bs.end()) bs.push_back(p.b());
  const double xs[] = {0.1, 0.4, 1.3, 2.5, 4.0};
  const std::string scale = "n<=15, x in {0.1,0.4,1.3,2.5,4}";
  std::vector<VerificationReport> out;
  for (double b : bs) {
    const auto q = make_params(p.a(), p.c(), b);
    double worst = 0.0;
    for (int n = 0; n <= 15; ++n)
      for (double x : xs) {
        const auto r = b_deformed_residual(n, x, q);
        worst = worse(worst, std::max(r.r1, r.r2));
      }
    out.push_back(make_report("b_deform.recurrences[b=" + num(b) + "]", ParamRecord::of(q), scale, worst,
                              o.b_deform_tolerance, "formal solution with argument x^2 - b^2"));
  }
  // b -> 0: the formal solution approaches psi_n / sqrt(w).
  const auto q0 = make_params(p.a(), p.c());
  const auto qe = make_params(p.a(), p.c(), 1e-9);
  double cont = 0.0, base = 0.0;
  for (int n = 0; n <= 15; ++n)
    for (double x : xs) {
      const auto f0 = formal_coeff(n, x, q0), fe = formal_coeff(n, x, qe);
      cont = worse(cont, std::abs(f0.value - fe.value) / std::max(std::abs(f0.value), f0.scale));
      const double sw = std::exp(log_sqrt_weight(x, p.a(), p.c()));
      const auto pc = psi_closed_eval(n, x, q0);
      base = worse(base, std::abs(f0.value * sw - pc.value) / std::max(std::abs(pc.value), pc.scale));
      const auto r = b_deformed_residual(n, x, q0);
      base = worse(base, std::max(r.r1, r.r2));
    }
  out.push_back(make_report("b_deform.continuity", ParamRecord::of(qe), scale, cont, 1e-6,
                            "b = 1e-9 against b = 0"));
  out.push_back(make_report("b_deform.b0_recurrences", ParamRecord::of(q0), scale, base, o.b_deform_tolerance,
                            "b = 0 reproduces the undeformed recurrences and psi_n / sqrt(w)"));
  return out;
}

}  // namespace

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::gram: return "gram";
    case Suite::commutators: return "commutators";
    case Suite::diff_relations: return "diff-relations";
    case Suite::realization: return "realization";
    case Suite::limits: return "limits";
    case Suite::cdh_orth: return "cdh-orth";
    case Suite::b_deform: return "b-deform";
  }
  return "unknown";
}

std::vector<Suite> all_suites() {
  return {Suite::gram, Suite::commutators, Suite::diff_relations, Suite::realization,
          Suite::limits, Suite::cdh_orth, Suite::b_deform};
}

bool SuiteResult::passed() const {
  return std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.passed; });
}

SuiteResult run_suite(Suite suite, const ModelParams& p, const VerifyOptions& opts) {
  SuiteResult res{std::string(suite_name(suite)), {}};
  try {
    switch (suite) {
      case Suite::gram: res.reports = gram_suite(p, opts); break;
      case Suite::commutators: res.reports = commutator_suite(p, opts); break;
      case Suite::diff_relations: res.reports = diff_suite(p, opts); break;
      case Suite::realization: res.reports = realization_suite(p, opts); break;
      case Suite::limits: res.reports = limits_suite(p, opts); break;
      case Suite::cdh_orth: res.reports = cdh_suite(p, opts); break;
      case Suite::b_deform: res.reports = b_deform_suite(p, opts); break;
    }
  } catch (const Error& e) {
    // A numerical failure inside a suite is a failed check, not a crash.
    res.reports.push_back(make_report(res.name + ".error", ParamRecord::of(p), "suite aborted",
                                      std::numeric_limits<double>::quiet_NaN(), 0.0, e.what()));
  }
  return res;
}

std::vector<SuiteResult> run_verification(const ModelParams& p, const VerifyOptions& opts) {
  const auto suites = all_suites();
  std::vector<SuiteResult> out;
  out.reserve(suites.size());
  if (!opts.parallel) {
    for (Suite s : suites) out.push_back(run_suite(s, p, opts));
    return out;
  }
  std::vector<std::future<SuiteResult>> pending;
  for (Suite s : suites) pending.push_back(std::async(std::launch::async, [s, &p, &opts] { return run_suite(s, p, opts); }));
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

std::string suites_to_json(const ModelParams& p, const std::vector<SuiteResult>& suites) {
  nlohmann::json doc;
  doc["params"] = {{"a", p.a()}, {"c", p.c()}, {"gamma", p.gamma()}, {"b", p.b()}};
  doc["suites"] = nlohmann::json::array();
  bool all = true;
  for (const auto& s : suites) {
    nlohmann::json js;
    js["suite"] = s.name;
    js["reports"] = nlohmann::json::array();
    for (const auto& r : s.reports) js["reports"].push_back(nlohmann::json::parse(to_json(r)));
    js["passed"] = s.passed();
    all = all && s.passed();
    doc["suites"].push_back(std::move(js));
  }
  doc["passed"] = all;
  return doc.dump(2);
}

}  // namespace su11g
