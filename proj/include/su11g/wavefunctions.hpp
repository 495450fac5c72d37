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

#ifndef SU11G_WAVEFUNCTIONS_HPP
#define SU11G_WAVEFUNCTIONS_HPP

#include <complex>
#include <span>
#include <vector>

#include "su11g/repalgebra.hpp"

namespace su11g {

/// Expansion coefficients A_0(x) ... A_nmax(x) of the formal position
/// eigenvector v(x) = sum_n A_n(x) |a,n>.
struct CoeffVector {
  double x = 0.0;
  int nmax = 0;
  std::vector<double> coeffs;
};

enum class WaveFamily { psi, phi_mp, psi_paraboson };

struct WaveSample {
  WaveFamily family = WaveFamily::psi;
  int n = 0;
  double x = 0.0;
  double value = 0.0;
};

/// log sqrt(w(x)) = Re[lnG(a+ix) + lnG(c+ix) - lnG(1/2+ix)].
double log_sqrt_weight(double x, double a, double c);

/// w(x) = |Gamma(a+ix) Gamma(c+ix) / Gamma(1/2+ix)|^2. Requires b = 0.
double weight_w(double x, const ModelParams& p);

/// Closed-form wave function psi_n^{(a,c)}(x) from continuous dual Hahn
/// polynomials with parameters (a,0,c) (even n) and (a,1,c) (odd n).
/// Requires b = 0.
double psi_closed(int n, double x, const ModelParams& p);

/// psi_closed with the magnitude scale of its polynomial sum attached.
struct WaveValue {
  double value = 0.0;
  double scale = 0.0;
};
WaveValue psi_closed_eval(int n, double x, const ModelParams& p);

/// Formal eigenvector coefficient A_n(x) in closed form. For b > 0 the
/// continuous dual Hahn argument is x^2 - b^2 and the parameters are (a,b,c),
/// (a,b+1,c); at b = 0 this is psi_closed / sqrt(w).
WaveValue formal_coeff(int n, double x, const ModelParams& p);

/// Forward solve of the position-eigenvector recurrences from
/// A_0 = 1/sqrt(Gamma(a+b) Gamma(b+c) Gamma(a+c)). nmax >= 1.
CoeffVector coeff_recurrence(double x, int nmax, const ModelParams& p);

/// psi_0(x) ... psi_nmax(x) by the same recurrence, seeded in log space so
/// that sqrt(w) never under- or overflows on its own. Requires b = 0.
std::vector<double> psi_vector(double x, int nmax, const ModelParams& p);

/// max_n |x A_n - (Q A)_n| for n < nmax: the eigen-equation restated through
/// the tridiagonal action of the position operator.
double position_eigen_residual(double x, std::span<const double> coeffs, const ModelParams& p);

/// Normalized Meixner-Pollaczek function phi_n^{(a)}(x).
double phi_mp_fn(int n, double x, double a);

/// Paraboson oscillator wave function Psi_n^{(a)}(xi). Even index:
/// (-1)^m sqrt(m!/Gamma(m+a)) |xi|^{a-1/2} e^{-xi^2/2} L_m^{(a-1)}(xi^2);
/// odd index: (-1)^m sqrt(m!/Gamma(m+a+1)) |xi|^{a-1/2} xi e^{-xi^2/2} L_m^{(a)}(xi^2).
/// Diverges at xi = 0 for a < 1/2 (IEEE infinity is returned).
double psi_paraboson(int n, double xi, double a);

/// i^n psi_n(p): coefficient of |a,n> in the formal momentum eigenvector.
std::complex<double> momentum_coeff(int n, double p, const ModelParams& params);

/// max_n |(P vbar)_n - p vbar_n| for n < nmax with vbar_n = i^n psi_n(p).
double momentum_eigen_residual(double p, int nmax, const ModelParams& params);

/// Samples one family on a grid, levels 0..nmax, level-major. Safe to call
/// concurrently on disjoint grids.
std::vector<WaveSample> tabulate(WaveFamily family, int nmax, std::span<const double> grid, const ModelParams& p);

}  // namespace su11g

#endif  // SU11G_WAVEFUNCTIONS_HPP
