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

#include "su11g/orthopoly.hpp"

#include <cmath>
#include <complex>

#include "su11g/error.hpp"
#include "su11g/specfun.hpp"

namespace su11g {

namespace {

void require_degree(int n, const char* who) {
  if (n < 0) throw DomainError(std::string(who) + ": negative degree");
}

}  // namespace

PolyValue cdh_eval(const CdhQuery& q) {
  require_degree(q.n, "cdh");
  if (!(q.a > 0.0) || !(q.c > 0.0) || q.b + q.a <= 0.0) {
    throw DomainError("cdh: parameters need a > 0, c > 0 and a + b > 0");
  }
  // a +- ix for x2 >= 0; a +- sqrt(-x2) (both real) for the formal x2 < 0 case.
  Complex p1, p2;
  if (q.x2 >= 0.0) {
    const double x = std::sqrt(q.x2);
    p1 = {q.a, x};
    p2 = {q.a, -x};
  } else {
    const double s = std::sqrt(-q.x2);
    p1 = {q.a + s, 0.0};
    p2 = {q.a - s, 0.0};
  }
  TermSeriesSpec spec;
  spec.n = q.n;
  spec.numerator_params = {Complex(-q.n, 0.0), p1, p2};
  spec.denominator_params = {Complex(q.a + q.b, 0.0), Complex(q.a + q.c, 0.0)};
  spec.argument = 1.0;
  const SeriesSum sum = hyp_terminating(spec);
  const double prefactor = pochhammer(q.a + q.b, q.n) * pochhammer(q.a + q.c, q.n);
  const double scale = std::abs(prefactor) * sum.max_term;
  return {prefactor * checked_real(sum.value, sum.max_term, "cdh"), scale};
}

double cdh(const CdhQuery& q) { return cdh_eval(q).value; }

PolyValue mp_eval(const MpQuery& q) {
  require_degree(q.n, "mp");
  if (!(q.a > 0.0)) throw DomainError("mp: need a > 0");
  TermSeriesSpec spec;
  spec.n = q.n;
  spec.numerator_params = {Complex(-q.n, 0.0), Complex(q.a, q.x)};
  spec.denominator_params = {Complex(2.0 * q.a, 0.0)};
  spec.argument = 2.0;
  const SeriesSum sum = hyp_terminating(spec);

  // i^n by table: exact, no rounding from std::pow.
  static const Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const Complex rotated = kIPow[q.n % 4] * sum.value;
  double prefactor = 1.0;
  for (int k = 0; k < q.n; ++k) prefactor *= (2.0 * q.a + k) / (k + 1);
  return {prefactor * checked_real(rotated, sum.max_term, "mp"), prefactor * sum.max_term};
}

double mp(const MpQuery& q) { return mp_eval(q).value; }

double laguerre(int n, double alpha, double t) {
  require_degree(n, "laguerre");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + alpha - t;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - t) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

DiffResiduals cdh_diff_residuals(int n, double x, double a, double b, double c) {
  require_degree(n, "cdh_diff_residuals");
  const double x2 = x * x;
  const PolyValue s_n = cdh_eval({n, x2, a, b, c});
  const PolyValue s_n1 = cdh_eval({n + 1, x2, a, b, c});
  const PolyValue t_n = cdh_eval({n, x2, a, b + 1.0, c});

  DiffResiduals out;
  const double k1 = x2 + b * b;
  const double k2 = (n + a + b) * (n + b + c);
  out.r1 = k1 * t_n.value - k2 * s_n.value + s_n1.value;
  out.scale1 = std::max({std::abs(k1) * t_n.scale, std::abs(k2) * s_n.scale, s_n1.scale});

  out.r2 = s_n.value - t_n.value;
  out.scale2 = std::max(s_n.scale, t_n.scale);
  if (n > 0) {
    const PolyValue t_prev = cdh_eval({n - 1, x2, a, b + 1.0, c});
    const double k3 = n * (n + a + c - 1.0);
    out.r2 += k3 * t_prev.value;
    out.scale2 = std::max(out.scale2, std::abs(k3) * t_prev.scale);
  }
  return out;
}

}  // namespace su11g
