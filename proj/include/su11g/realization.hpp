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

#ifndef SU11G_REALIZATION_HPP
#define SU11G_REALIZATION_HPP

// Differential-reflection realization of the deformed algebra on polynomials
// in z, with the basis |a,n> = basis_norm(n) z^n.

#include <complex>
#include <vector>

#include "su11g/repalgebra.hpp"

namespace su11g {

/// Polynomial in z; coefficient of z^k at index k. Trailing zeros are
/// stripped, so the zero polynomial has no coefficients.
class PolyInZ {
 public:
  PolyInZ() = default;
  explicit PolyInZ(std::vector<double> coeffs);

  static PolyInZ monomial(int k, double coeff = 1.0);

  const std::vector<double>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  double coeff(int k) const;
  bool is_zero() const { return coeffs_.empty(); }

  friend bool operator==(const PolyInZ&, const PolyInZ&) = default;

 private:
  std::vector<double> coeffs_;
};

enum class RealizedKind { J0, Jplus, Jminus, R };

enum class Parity { even, odd };

/// Scalar multiplying z^n in the realization of |a,n>. Requires b = 0.
double basis_norm(int n, const ModelParams& p);

/// J0 = z d/dz + a + c - 1/2
/// J- = d/dz + (c - 1/2)(1 - R)/z
/// J+ = z^2 d/dz + 2a z + (c - 1/2) z (1 - R)
/// R f(z) = f(-z)
PolyInZ apply_realized(RealizedKind kind, const PolyInZ& f, const ModelParams& p);

/// max over n <= nmax and J0, J+, J- of |realized matrix element - matrix
/// element of build_operator|.
double realization_consistency(int nmax, const ModelParams& p);

/// Partial sum over n = 0..nterms of psi_{2n}(x) basis_norm(2n) z^{2n} (even)
/// or psi_{2n+1}(x) basis_norm(2n+1) z^{2n+1} (odd). Requires |z| <= 0.9.
double generating_sum(double x, double z, const ModelParams& p, Parity parity, int nterms);

/// Closed form of the full generating sum:
///   even: psi_0(x) (1+z^2)^{-a+ix} 2F1(ix, c+ix; c; -z^2)
///   odd:  psi_0(x) (xz/c) (1+z^2)^{-a+ix} 2F1(1+ix, c+ix; 1+c; -z^2)
/// with psi_0(x) = sqrt(w / (Gamma(a) Gamma(c) Gamma(a+c))). The 2F1 is summed
/// directly (at most 500 terms). Requires |z| <= 0.9. The result is complex;
/// its imaginary part is rounding noise.
std::complex<double> generating_closed_form(double x, double z, const ModelParams& p, Parity parity);

}  // namespace su11g

#endif  // SU11G_REALIZATION_HPP
