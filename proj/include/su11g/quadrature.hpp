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

#ifndef SU11G_QUADRATURE_HPP
#define SU11G_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace su11g {

struct QuadratureSpec {
  double rel_tol = 1e-12;
  double abs_tol = 1e-15;
  /// Upper cap on the truncation half-width L. Beyond ~300 the weights
  /// underflow to exactly zero in double precision anyway.
  double max_halfwidth = 300.0;
  int panel_order = 32;
  /// Budget of panel evaluations before ConvergenceError.
  int max_panels = 20000;
};

enum class Symmetry { none, even, odd };

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Newton iteration on the Legendre recurrence; order >= 1.
GaussRule gauss_legendre(int order);

struct QuadratureResult {
  std::vector<double> values;
  double error_estimate = 0.0;
  double halfwidth = 0.0;
  int panel_evaluations = 0;
};

/// Integrand writing `components` values at x into `out`.
using VectorIntegrand = std::function<void(double x, std::span<double> out)>;

/// Half-width L at which the envelope C L^d e^{-pi L} drops below abs_tol/10.
/// C is fitted from samples of |f| on [20, 40]; L is clamped to [40, cap].
double truncation_halfwidth(const VectorIntegrand& f, std::size_t components, Symmetry sym,
                            double envelope_degree, const QuadratureSpec& spec);

/// Integral over the real line of an integrand decaying like
/// |x|^d e^{-pi |x|}: truncated to [-L, L], composite adaptive Gauss-Legendre
/// panels with dyadic refinement towards 0. Panels are summed in order of
/// increasing |x|, so results are reproducible bit for bit.
/// Odd symmetry returns zeros without evaluating f; even symmetry integrates
/// [0, L] and doubles. Throws ConvergenceError when max_panels is exhausted.
QuadratureResult integrate_real_line(const VectorIntegrand& f, std::size_t components, Symmetry sym,
                                     double envelope_degree, const QuadratureSpec& spec);

double integrate_real_line(const std::function<double(double)>& f, Symmetry sym, double envelope_degree,
                           const QuadratureSpec& spec);

}  // namespace su11g

#endif  // SU11G_QUADRATURE_HPP
