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

#include "su11g/wavefunctions.hpp"

#include <cmath>
#include <numbers>

#include "su11g/error.hpp"
#include "su11g/orthopoly.hpp"
#include "su11g/specfun.hpp"

namespace su11g {

namespace {

double lgam(double v) { return log_abs_gamma(Complex(v, 0.0)); }

void require_undeformed_b(const ModelParams& p, const char* who) {
  if (p.b() != 0.0) throw DomainError(std::string(who) + ": defined for b = 0 only");
}

void require_level(int n, const char* who) {
  if (n < 0) throw DomainError(std::string(who) + ": negative level");
}

double parity_sign(int m) { return (m % 2 == 0) ? 1.0 : -1.0; }

// log of the Gamma normalisation in the closed-form coefficients, general b.
double log_coeff_norm(int n, double a, double b, double c) {
  const int m = n / 2;
  if (n % 2 == 0) return 0.5 * (lgam(m + a + b) + lgam(m + b + c) + lgam(m + a + c) + lgam(m + 1.0));
  return 0.5 * (lgam(m + a + b + 1.0) + lgam(m + b + c + 1.0) + lgam(m + a + c) + lgam(m + 1.0));
}

// Closed-form coefficient times exp(log_dressing), all exponentials combined.
WaveValue dressed_coeff(int n, double x, double a, double b, double c, double log_dressing) {
  const int m = n / 2;
  const bool odd = (n % 2) != 0;
  const PolyValue s = cdh_eval({m, x * x - b * b, a, odd ? b + 1.0 : b, c});
  const double factor = std::exp(log_dressing - log_coeff_norm(n, a, b, c));
  const double lead = parity_sign(m) * (odd ? x : 1.0);
  return {lead * s.value * factor, std::abs(lead) * s.scale * factor};
}

double log_psi0(double x, double a, double c) {
  return log_sqrt_weight(x, a, c) - 0.5 * (lgam(a) + lgam(c) + lgam(a + c));
}

}  // namespace

double log_sqrt_weight(double x, double a, double c) {
  return log_abs_gamma({a, x}) + log_abs_gamma({c, x}) - log_abs_gamma({0.5, x});
}

double weight_w(double x, const ModelParams& p) {
  require_undeformed_b(p, "weight_w");
  return std::exp(2.0 * log_sqrt_weight(x, p.a(), p.c()));
}

WaveValue psi_closed_eval(int n, double x, const ModelParams& p) {
  require_undeformed_b(p, "psi_closed");
  require_level(n, "psi_closed");
  return dressed_coeff(n, x, p.a(), 0.0, p.c(), log_sqrt_weight(x, p.a(), p.c()));
}

double psi_closed(int n, double x, const ModelParams& p) { return psi_closed_eval(n, x, p).value; }

WaveValue formal_coeff(int n, double x, const ModelParams& p) {
  require_level(n, "formal_coeff");
  return dressed_coeff(n, x, p.a(), p.b(), p.c(), 0.0);
}

CoeffVector coeff_recurrence(double x, int nmax, const ModelParams& p) {
  if (nmax < 1) throw DomainError("coeff_recurrence: need nmax >= 1");
  const double a = p.a(), b = p.b(), c = p.c();
  CoeffVector out{x, nmax, std::vector<double>(static_cast<std::size_t>(nmax) + 1)};
  auto& coef = out.coeffs;
  coef[0] = std::exp(-0.5 * (lgam(a + b) + lgam(b + c) + lgam(a + c)));
  // x A_n = beta_n A_{n+1} + beta_{n-1} A_{n-1}
  for (int n = 0; n < nmax; ++n) {
    const double back = n > 0 ? q_offdiag(n - 1, p) * coef[n - 1] : 0.0;
    coef[n + 1] = (x * coef[n] - back) / q_offdiag(n, p);
  }
  return out;
}

std::vector<double> psi_vector(double x, int nmax, const ModelParams& p) {
  require_undeformed_b(p, "psi_vector");
  require_level(nmax, "psi_vector");
  constexpr double kBig = 1e150;
  const double log_big = std::log(kBig);

  std::vector<double> out(static_cast<std::size_t>(nmax) + 1);
  // value_n = mantissa_n * exp(shift); rescaled whenever the mantissa drifts.
  double shift = log_psi0(x, p.a(), p.c());
  double prev = 0.0;
  double cur = 1.0;
  out[0] = std::exp(shift);
  for (int n = 0; n < nmax; ++n) {
    const double back = n > 0 ? q_offdiag(n - 1, p) * prev : 0.0;
    double next = (x * cur - back) / q_offdiag(n, p);
    if (std::abs(next) > kBig) {
      next /= kBig;
      cur /= kBig;
      shift += log_big;
    } else if (std::abs(next) < 1.0 / kBig && std::abs(cur) < 1.0 / kBig) {
      next *= kBig;
      cur *= kBig;
      shift -= log_big;
    }
    prev = cur;
    cur = next;
    out[n + 1] = cur * std::exp(shift);
  }
  return out;
}

double position_eigen_residual(double x, std::span<const double> coeffs, const ModelParams& p) {
  if (coeffs.size() < 2) throw DomainError("position_eigen_residual: need at least two coefficients");
  double worst = 0.0;
  for (std::size_t n = 0; n + 1 < coeffs.size(); ++n) {
    const int k = static_cast<int>(n);
    const double t0 = x * coeffs[n];
    const double t1 = q_offdiag(k, p) * coeffs[n + 1];
    const double t2 = n > 0 ? q_offdiag(k - 1, p) * coeffs[n - 1] : 0.0;
    const double scale = std::max({std::abs(t0), std::abs(t1), std::abs(t2)});
    if (scale == 0.0) continue;
    worst = std::max(worst, std::abs(t0 - t1 - t2) / scale);
  }
  return worst;
}

double phi_mp_fn(int n, double x, double a) {
  require_level(n, "phi_mp_fn");
  if (!(a > 0.0)) throw DomainError("phi_mp_fn: need a > 0");
  const double poly = mp({n, x, a});
  const double log_pref = a * std::numbers::ln2 + 0.5 * lgam(n + 1.0) - 0.5 * std::log(2.0 * std::numbers::pi) -
                          0.5 * lgam(n + 2.0 * a) + log_abs_gamma({a, x});
  return poly * std::exp(log_pref);
}

double psi_paraboson(int n, double xi, double a) {
  require_level(n, "psi_paraboson");
  if (!(a > 0.0)) throw DomainError("psi_paraboson: need a > 0");
  const int m = n / 2;
  const bool odd = (n % 2) != 0;
  const double t = xi * xi;
  const double lag = laguerre(m, odd ? a : a - 1.0, t);
  const double log_norm = 0.5 * (lgam(m + 1.0) - lgam(m + (odd ? a + 1.0 : a)));
  // |xi|^{a-1/2} for even, |xi|^{a-1/2} xi = sign(xi) |xi|^{a+1/2} for odd
  const double power = odd ? std::copysign(std::pow(std::abs(xi), a + 0.5), xi) : std::pow(std::abs(xi), a - 0.5);
  return parity_sign(m) * power * std::exp(log_norm - 0.5 * t) * lag;
}

std::complex<double> momentum_coeff(int n, double p, const ModelParams& params) {
  static const std::complex<double> kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return kIPow[n % 4] * psi_closed(n, p, params);
}

double momentum_eigen_residual(double p, int nmax, const ModelParams& params) {
  if (nmax < 1) throw DomainError("momentum_eigen_residual: need nmax >= 1");
  std::vector<std::complex<double>> v(static_cast<std::size_t>(nmax) + 1);
  for (int n = 0; n <= nmax; ++n) v[n] = momentum_coeff(n, p, params);
  const std::complex<double> i(0.0, 1.0);
  double worst = 0.0;
  for (int n = 0; n < nmax; ++n) {
    std::complex<double> pv = -0.5 * i * lowering_coeff(n + 1, params) * v[n + 1];
    if (n > 0) pv += 0.5 * i * raising_coeff(n - 1, params) * v[n - 1];
    worst = std::max(worst, std::abs(pv - p * v[n]));
  }
  return worst;
}

std::vector<WaveSample> tabulate(WaveFamily family, int nmax, std::span<const double> grid, const ModelParams& p) {
  require_level(nmax, "tabulate");
  const std::size_t levels = static_cast<std::size_t>(nmax) + 1;
  std::vector<WaveSample> out(levels * grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double x = grid[j];
    std::vector<double> column;
    if (family == WaveFamily::psi) column = psi_vector(x, nmax, p);
    for (int n = 0; n <= nmax; ++n) {
      double value = 0.0;
      switch (family) {
        case WaveFamily::psi: value = column[n]; break;
        case WaveFamily::phi_mp: value = phi_mp_fn(n, x, p.a()); break;
        case WaveFamily::psi_paraboson: value = psi_paraboson(n, x, p.a()); break;
      }
      out[static_cast<std::size_t>(n) * grid.size() + j] = {family, n, x, value};
    }
  }
  return out;
}

}  // namespace su11g
