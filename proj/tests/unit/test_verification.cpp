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

#include <cmath>
#include <limits>
#include <numbers>

#include "doctest.h"
#include "json.hpp"
#include "su11g/error.hpp"
#include "su11g/verification.hpp"
#include "su11g/wavefunctions.hpp"

using namespace su11g;

TEST_CASE("reports: passed iff residual <= tolerance") {
  const ParamRecord rec = ParamRecord::of(make_params(1, 2));
  CHECK(make_report("x", rec, "s", 1e-9, 1e-8).passed);
  CHECK(make_report("x", rec, "s", 1e-8, 1e-8).passed);
  CHECK_FALSE(make_report("x", rec, "s", 2e-8, 1e-8).passed);
  CHECK_FALSE(make_report("x", rec, "s", std::numeric_limits<double>::quiet_NaN(), 1.0).passed);
  CHECK_FALSE(make_report("x", rec, "s", std::numeric_limits<double>::infinity(), 1.0).passed);
}

TEST_CASE("reports: JSON has exactly the documented fields and round-trips") {
  const auto p = make_params(0.7, 1.3, 0.25);
  const auto r = make_report("gram[nmax=4]", ParamRecord::of(p), "m,n <= 4", 3.5e-12, 1e-8, "route=closed");
  const auto j = nlohmann::json::parse(to_json(r));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"check_id", "notes", "params", "passed", "residual", "scale", "tolerance"});
  std::vector<std::string> pkeys;
  for (auto it = j["params"].begin(); it != j["params"].end(); ++it) pkeys.push_back(it.key());
  CHECK(pkeys == std::vector<std::string>{"a", "b", "c", "gamma"});
  CHECK(j["params"]["gamma"].get<double>() == p.gamma());

  const auto back = report_from_json(to_json(r));
  CHECK(back.check_id == r.check_id);
  CHECK(back.params.a == 0.7);
  CHECK(back.params.b == 0.25);
  CHECK(back.residual == r.residual);
  CHECK(back.passed);
  CHECK(back.notes == r.notes);

  const auto bad = make_report("nan", ParamRecord::of(p), "", std::numeric_limits<double>::quiet_NaN(), 1.0);
  CHECK(nlohmann::json::parse(to_json(bad))["residual"].is_null());
  CHECK(std::isnan(report_from_json(to_json(bad)).residual));
  CHECK_THROWS_AS(report_from_json("{not json"), IoError);
  CHECK_THROWS_AS(report_from_json("{}"), IoError);
}

TEST_CASE("gram_matrix: small cases") {
  const auto g0 = gram_matrix(0, make_params(1, 2));
  REQUIRE(g0.matrix.rows() == 1);
  CHECK(std::abs(g0.matrix(0, 0) - 1.0) <= 1e-10);
  const auto g = gram_matrix(7, make_params(0.8, 1.4));
  for (int m = 0; m <= 7; ++m)
    for (int n = 0; n <= 7; ++n)
      if ((m + n) % 2) CHECK(g.matrix(m, n) == 0.0);
  CHECK_THROWS_AS(gram_matrix(3, make_params(1, 1, 0.5)), DomainError);
}

TEST_CASE("gram_matrix: nmax = 16 at (1, 2)") {
  const auto g = gram_matrix(16, make_params(1, 2));
  CHECK(g.report.residual <= 1e-8);
  CHECK(g.report.passed);
  CHECK(g.report.check_id == "gram[nmax=16]");
}

TEST_CASE("gram_matrix: route switch and tolerance halving") {
  for (auto [a, c] : {std::pair{0.6, 0.6}, std::pair{2.0, 0.5}}) {
    const auto p = make_params(a, c);
    const auto rec = gram_matrix(16, p, {}, PsiRoute::recurrence);
    const auto cl = gram_matrix(16, p, {}, PsiRoute::closed);
    // Both residuals sit at rounding level, so the factor-2 comparison gets a 1e-13 floor.
    const double lo = std::min(rec.report.residual, cl.report.residual);
    const double hi = std::max(rec.report.residual, cl.report.residual);
    CHECK(hi <= 2.0 * std::max(lo, 1e-13));

    QuadratureSpec half;
    half.rel_tol /= 2;
    const auto h = gram_matrix(16, p, half, PsiRoute::recurrence);
    CHECK((h.matrix - rec.matrix).cwiseAbs().maxCoeff() <= rec.error_estimate);
  }
}

TEST_CASE("cdh_orthogonality: examples") {
  const double one = cdh_orthogonality_integral(0, 0, 1, 0, 1, {}, WeightForm::gamma_quotient);
  CHECK(std::abs(one - 1.0) <= 1e-8);
  CHECK(cdh_orthogonality(0, 0, 1, 0, 1).passed);
  const auto off = cdh_orthogonality(0, 1, 1, 0, 1);
  CHECK(off.residual <= 1e-8);
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) CHECK(cdh_orthogonality(m, n, 0.8, 1.0, 1.6).passed);
  CHECK(cdh_orthogonality(2, 2, 0.5, 0.7, 1.2).passed);  // general b
  CHECK_THROWS_AS(cdh_orthogonality(0, 0, 0, 0, 1), DomainError);
}

TEST_CASE("cdh_orthogonality: gamma-quotient and w-based weights agree") {
  for (double b : {0.0, 1.0})
    for (auto [a, c] : {std::pair{1.0, 2.0}, std::pair{0.3, 0.9}}) {
      for (double x : {0.0, 0.01, 0.7, 3.0, 20.0}) {
        const double g = cdh_orth_weight(x, a, b, c, WeightForm::gamma_quotient);
        const double w = cdh_orth_weight(x, a, b, c, WeightForm::via_w);
        CHECK(std::abs(g - w) <= 1e-12 * std::max(g, 1e-300));
      }
      for (int n = 0; n <= 3; ++n) {
        const double i1 = cdh_orthogonality_integral(n, n, a, b, c, {}, WeightForm::gamma_quotient);
        const double i2 = cdh_orthogonality_integral(n, n, a, b, c, {}, WeightForm::via_w);
        CHECK(std::abs(i1 - i2) <= 1e-9 * std::abs(i1));
      }
    }
  CHECK_THROWS_AS(cdh_orth_weight(1.0, 1.0, 0.5, 1.0, WeightForm::via_w), DomainError);
}

TEST_CASE("completeness: kernel symmetry and the documented example") {
  const auto p = make_params(1, 1);
  for (double x : {-1.3, 0.2, 2.9})
    for (double y : {-0.4, 0.5, 4.1}) CHECK(completeness_kernel(x, y, 32, p) == completeness_kernel(y, x, 32, p));

  const auto r = delta_completeness(0.5, 0.5, 64, p, 0.5);
  REQUIRE(r.sizes == std::vector<int>{8, 16, 32, 64});
  for (std::size_t k = 1; k < r.errors.size(); ++k) CHECK(r.errors[k] < r.errors[k - 1]);
  REQUIRE(r.reports.size() == 2);
  CHECK(r.reports[0].check_id == "completeness.monotone");
  CHECK(r.reports[0].passed);
  // At N = 64 the sharp bump is still resolved only to ~5e-3, so the final bound fails here.
  CHECK(r.reports[1].check_id == "completeness.final");
  CHECK(r.errors.back() == doctest::Approx(4.85e-3).epsilon(0.02));
  CHECK_FALSE(r.reports[1].passed);
}

TEST_CASE("completeness: a wider bump meets the final bound") {
  const auto r = delta_completeness(0.5, 0.5, 64, make_params(2, 0.5), 2.0);
  CHECK(r.reports[0].passed);
  CHECK(r.reports[1].passed);
}

TEST_CASE("completeness: bump far from x reconstructs to a small value") {
  const auto r = delta_completeness(0.5, 5.5, 64, make_params(1, 1), 0.5);
  for (double e : r.errors) CHECK(e < 2e-2);
}

TEST_CASE("limit_suite: c = 1/2") {
  const double a[] = {1.0};
  const auto reps = limit_suite(LimitKind::c_half, a);
  REQUIRE(reps.size() == 11);
  for (const auto& r : reps) CHECK(r.passed);
  CHECK(reps[0].check_id == "limits.c_half[a=1,n=0]");
  CHECK(reps[0].residual <= 1e-10);
}

TEST_CASE("limit_suite: c -> infinity") {
  const auto ladder = paraboson_ladder(3, 2.0);
  REQUIRE(ladder.size() == 3);
  CHECK(ladder[1] < ladder[0]);
  CHECK(ladder[2] < ladder[1]);

  const double a[] = {0.5};
  const auto reps = limit_suite(LimitKind::c_infinity, a);
  bool saw_ground = false;
  for (const auto& r : reps) {
    CAPTURE(r.check_id);
    CHECK(r.passed);
    if (r.check_id == "limits.c_infinity.canonical_ground") {
      saw_ground = true;
      CHECK(r.residual <= 1e-2);
    }
  }
  CHECK(saw_ground);
}

TEST_CASE("b-deformed recurrences") {
  const auto p = make_params(1.0, 1.5, 0.5);
  // n = 0, first relation: x A_0 = sqrt((a+b)(b+c)) A_1 identically.
  for (double x : {0.2, 1.1, 3.0}) {
    const auto a0 = formal_coeff(0, x, p), a1 = formal_coeff(1, x, p);
    CHECK(x * a0.value == doctest::Approx(std::sqrt((1.0 + 0.5) * (0.5 + 1.5)) * a1.value).epsilon(1e-14));
    CHECK(b_deformed_residual(0, x, p).r1 <= 1e-14);
  }
  const auto r = b_deformed_residual(3, 2.5, p);
  CHECK(r.r1 <= 1e-9);
  CHECK(r.r2 <= 1e-9);
  // Below |x| < b the polynomial argument x^2 - b^2 is negative; the recurrence still holds.
  const auto s = b_deformed_residual(4, 0.2, p);
  CHECK(s.r1 <= 1e-9);
  CHECK(s.r2 <= 1e-9);
  // b -> 0 continuity with the undeformed coefficients.
  const auto q0 = make_params(1.0, 1.5), qe = make_params(1.0, 1.5, 1e-10);
  for (int n = 0; n <= 10; ++n) {
    const auto f0 = formal_coeff(n, 0.9, q0), fe = formal_coeff(n, 0.9, qe);
    CHECK(std::abs(f0.value - fe.value) <= 1e-8 * std::max(std::abs(f0.value), f0.scale));
    const auto r0 = b_deformed_residual(n, 0.9, q0);
    CHECK(r0.r1 <= 1e-12);
    CHECK(r0.r2 <= 1e-12);
  }
}

TEST_CASE("suite runner: default parameters pass and parallel equals sequential") {
  const auto p = make_params(1, 1);
  VerifyOptions seq;
  seq.parallel = false;
  const auto a = run_verification(p, seq);
  const auto b = run_verification(p, {});
  REQUIRE(a.size() == 7);
  CHECK(suites_to_json(p, a) == suites_to_json(p, b));
  for (const auto& s : a) {
    CAPTURE(s.name);
    CHECK(s.passed());
  }
  std::vector<std::string> names;
  for (const auto& s : a) names.push_back(s.name);
  CHECK(names == std::vector<std::string>{"gram", "commutators", "diff-relations", "realization", "limits",
                                          "cdh-orth", "b-deform"});
  const auto doc = nlohmann::json::parse(suites_to_json(p, a));
  CHECK(doc["passed"].get<bool>());
  CHECK(doc["suites"].size() == 7);
}

TEST_CASE("suite runner: c = 1/2 selects the c_half branch only") {
  const auto s = run_suite(Suite::limits, make_params(1, 0.5));
  REQUIRE_FALSE(s.reports.empty());
  for (const auto& r : s.reports) CHECK(r.check_id.rfind("limits.c_half", 0) == 0);
  CHECK(s.passed());
}

TEST_CASE("suite runner: a tightened tolerance fails the Gram check") {
  VerifyOptions o;
  o.gram_tolerance = 1e-20;
  const auto s = run_suite(Suite::gram, make_params(1, 1), o);
  CHECK_FALSE(s.passed());
  CHECK_FALSE(s.reports[0].passed);
}
