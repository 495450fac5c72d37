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

#ifndef SU11G_SPECFUN_HPP
#define SU11G_SPECFUN_HPP

// Scalar special-function kernel: complex log-gamma, |Gamma|^2, Pochhammer
// symbols and terminating generalized hypergeometric sums.

#include <complex>
#include <vector>

namespace su11g {

using Complex = std::complex<double>;

/// Principal branch of log Gamma(z). Throws PoleError for z in {0, -1, -2, ...}.
Complex ln_gamma(Complex z);

/// Re log Gamma(z) = log |Gamma(z)|. Exactly symmetric under z -> conj(z).
double log_abs_gamma(Complex z);

/// |Gamma(z)|^2, computed as exp(2 Re log Gamma(z)).
double abs_gamma_sq(Complex z);

/// Rising factorial (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1.
double pochhammer(double a, int k);

/// A terminating series  sum_{k=0}^{n} prod (num)_k / prod (den)_k * arg^k / k!.
struct TermSeriesSpec {
  int n = 0;
  std::vector<Complex> numerator_params;
  std::vector<Complex> denominator_params;
  Complex argument{1.0, 0.0};
};

struct SeriesSum {
  Complex value;
  /// Largest |term| encountered; the natural magnitude scale for rounding error.
  double max_term = 0.0;
};

/// Sums the n+1 terms front to back with a running term update. Throws
/// PoleError if a denominator parameter hits zero within the summed terms and
/// DomainError for n < 0.
SeriesSum hyp_terminating(const TermSeriesSpec& spec);

/// Real part of a series value whose imaginary part must be rounding noise.
/// Throws DomainError when |Im| > 1e-10 * (1 + max(|Re|, scale)).
double checked_real(Complex value, double scale, const char* context);

}  // namespace su11g

#endif  // SU11G_SPECFUN_HPP
