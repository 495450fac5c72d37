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

#include "su11g/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "su11g/error.hpp"

namespace su11g {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;
constexpr double kLogPi = 1.1447298858494001741434273513531;

// B_{2k} / (2k (2k-1)) for k = 1..10.
constexpr std::array<double, 10> kStirling = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

constexpr double kStirlingRadius = 15.0;

bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// Asymptotic series, valid for Re z >= 1/2 and |z| >= kStirlingRadius.
Complex stirling(Complex z) {
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex corr = 0.0;
  Complex power = inv;
  for (double coeff : kStirling) {
    corr += coeff * power;
    power *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + kHalfLog2Pi + corr;
}

Complex ln_gamma_right(Complex z) {
  // Shift up until Stirling is accurate; the sum of principal logs keeps the
  // principal branch.
  Complex shift = 0.0;
  while (std::abs(z) < kStirlingRadius) {
    shift += std::log(z);
    z += 1.0;
  }
  return stirling(z) - shift;
}

double wrap_angle(double theta) {
  double r = std::remainder(theta, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

// Principal log of sin(pi z), without overflow for large |Im z|.
Complex log_sinpi(Complex z) {
  const double y = z.imag();
  if (std::abs(y) <= 20.0) {
    // Reduce Re z modulo 2 first so that sin(pi z) keeps full accuracy.
    const double xr = z.real() - 2.0 * std::round(0.5 * z.real());
    return std::log(std::sin(kPi * Complex(xr, y)));
  }
  const Complex iz(0.0, 1.0);
  Complex v;
  if (y > 0.0) {
    // sin(pi z) = -exp(-i pi z) (1 - exp(2 i pi z)) / (2i)
    v = -iz * kPi * z + std::log(iz * (1.0 - std::exp(2.0 * iz * kPi * z)) / 2.0);
  } else {
    // sin(pi z) = exp(i pi z) (1 - exp(-2 i pi z)) / (2i)
    v = iz * kPi * z + std::log((1.0 - std::exp(-2.0 * iz * kPi * z)) / (2.0 * iz));
  }
  return {v.real(), wrap_angle(v.imag())};
}

}  // namespace

Complex ln_gamma(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("ln_gamma: non-finite argument");
  }
  if (is_nonpositive_integer(z)) {
    std::ostringstream os;
    os << "ln_gamma: pole at z = " << z.real();
    throw PoleError(os.str());
  }
  if (z.real() >= 0.5) return ln_gamma_right(z);
  // Reflection gives the value up to a multiple of 2 pi i. The principal
  // branch obeys lnG(z) = lnG(z+k) - sum log(z+j) exactly, so a cheap shifted
  // evaluation fixes the multiple.
  const Complex refl = Complex(kLogPi, 0.0) - log_sinpi(z) - ln_gamma_right(1.0 - z);
  const double k = std::ceil(0.5 - z.real());
  if (k > 1e6) return refl;
  Complex w = z;
  double target = 0.0;
  for (int j = 0; j < static_cast<int>(k); ++j, w += 1.0) target -= std::arg(w);
  target += ln_gamma_right(w).imag();
  const double turns = std::round((target - refl.imag()) / (2.0 * kPi));
  return {refl.real(), refl.imag() + 2.0 * kPi * turns};
}

double log_abs_gamma(Complex z) {
  return ln_gamma(Complex(z.real(), std::abs(z.imag()))).real();
}

double abs_gamma_sq(Complex z) { return std::exp(2.0 * log_abs_gamma(z)); }

double pochhammer(double a, int k) {
  double p = 1.0;
  for (int j = 0; j < k; ++j) p *= a + j;
  return p;
}

SeriesSum hyp_terminating(const TermSeriesSpec& spec) {
  using LComplex = std::complex<long double>;
  if (spec.n < 0) throw DomainError("hyp_terminating: negative termination index");

  for (const Complex& d : spec.denominator_params) {
    for (int k = 0; k < spec.n; ++k) {
      if (d + static_cast<double>(k) == Complex(0.0, 0.0)) {
        std::ostringstream os;
        os << "hyp_terminating: denominator parameter " << d.real() << " vanishes at term " << k + 1;
        throw PoleError(os.str());
      }
    }
  }

  const LComplex arg(spec.argument.real(), spec.argument.imag());
  LComplex term = 1.0L;
  LComplex sum = 0.0L;
  long double max_term = 0.0L;
  for (int k = 0; k <= spec.n; ++k) {
    sum += term;
    max_term = std::max(max_term, std::abs(term));
    if (k == spec.n) break;
    LComplex ratio = arg / static_cast<long double>(k + 1);
    for (const Complex& p : spec.numerator_params) {
      ratio *= LComplex(p.real(), p.imag()) + static_cast<long double>(k);
    }
    for (const Complex& d : spec.denominator_params) {
      ratio /= LComplex(d.real(), d.imag()) + static_cast<long double>(k);
    }
    term *= ratio;
  }
  return {Complex(static_cast<double>(sum.real()), static_cast<double>(sum.imag())),
          static_cast<double>(max_term)};
}

double checked_real(Complex value, double scale, const char* context) {
  const double bound = 1e-10 * (1.0 + std::max(std::abs(value.real()), std::abs(scale)));
  if (!(std::abs(value.imag()) <= bound)) {
    std::ostringstream os;
    os << context << ": imaginary residue " << value.imag() << " exceeds " << bound;
    throw DomainError(os.str());
  }
  return value.real();
}

}  // namespace su11g
