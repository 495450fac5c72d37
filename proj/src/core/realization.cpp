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

#include "su11g/realization.hpp"

#include <cmath>

#include "su11g/error.hpp"
#include "su11g/specfun.hpp"
#include "su11g/wavefunctions.hpp"

namespace su11g {

PolyInZ::PolyInZ(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

PolyInZ PolyInZ::monomial(int k, double coeff) {
  if (k < 0) throw DomainError("PolyInZ::monomial: negative degree");
  std::vector<double> c(static_cast<std::size_t>(k) + 1, 0.0);
  c[k] = coeff;
  return PolyInZ(std::move(c));
}

double PolyInZ::coeff(int k) const {
  if (k < 0 || k > degree()) return 0.0;
  return coeffs_[k];
}

double basis_norm(int n, const ModelParams& p) {
  if (n < 0) throw DomainError("basis_norm: negative level");
  if (p.b() != 0.0) throw DomainError("basis_norm: defined for b = 0 only");
  const double a = p.a(), c = p.c();
  const int m = n / 2;
  // Ratio products: the Pochhammer symbols themselves overflow for large m.
  double sq = 1.0;
  if (n % 2 == 0) {
    for (int j = 0; j < m; ++j) sq *= (a + j) * (a + c + j) / ((c + j) * (j + 1.0));
  } else {
    sq = a / c;
    for (int j = 0; j < m; ++j) sq *= (a + 1.0 + j) * (a + c + j) / ((c + 1.0 + j) * (j + 1.0));
  }
  return std::sqrt(sq);
}

PolyInZ apply_realized(RealizedKind kind, const PolyInZ& f, const ModelParams& p) {
  const double a = p.a(), c = p.c();
  const double refl = c - 0.5;
  const auto& in = f.coeffs();
  const int deg = f.degree();
  if (deg < 0) return {};
  std::vector<double> out;
  switch (kind) {
    case RealizedKind::J0:
      out.resize(in.size());
      for (int k = 0; k <= deg; ++k) out[k] = (k + a + c - 0.5) * in[k];
      break;
    case RealizedKind::R:
      out.resize(in.size());
      for (int k = 0; k <= deg; ++k) out[k] = (k % 2 == 0) ? in[k] : -in[k];
      break;
    case RealizedKind::Jminus:
      // z^k -> (k + (c-1/2)(1 - (-1)^k)) z^{k-1}; (1-R) kills even powers, so no pole.
      out.assign(in.size() > 1 ? in.size() - 1 : 0, 0.0);
      for (int k = 1; k <= deg; ++k) out[k - 1] = (k + (k % 2 != 0 ? 2.0 * refl : 0.0)) * in[k];
      break;
    case RealizedKind::Jplus:
      out.assign(in.size() + 1, 0.0);
      for (int k = 0; k <= deg; ++k) out[k + 1] = (k + 2.0 * a + (k % 2 != 0 ? 2.0 * refl : 0.0)) * in[k];
      break;
  }
  return PolyInZ(std::move(out));
}

double realization_consistency(int nmax, const ModelParams& p) {
  if (nmax < 0) throw DomainError("realization_consistency: negative nmax");
  const OperatorMatrix j0 = build_operator(OperatorKind::J0, p, nmax + 2);
  const OperatorMatrix jp = build_operator(OperatorKind::Jplus, p, nmax + 2);
  const OperatorMatrix jm = build_operator(OperatorKind::Jminus, p, nmax + 2);

  double worst = 0.0;
  auto compare = [&worst](double realized, std::complex<double> expected) {
    worst = std::max(worst, std::abs(realized - expected));
  };
  // Anything outside the single expected monomial is a structural mismatch.
  auto stray = [&worst](const PolyInZ& g, int keep) {
    for (int k = 0; k <= g.degree(); ++k) {
      if (k != keep) worst = std::max(worst, std::abs(g.coeff(k)));
    }
  };

  for (int n = 0; n <= nmax; ++n) {
    const double norm_n = basis_norm(n, p);
    const PolyInZ basis = PolyInZ::monomial(n, norm_n);

    const PolyInZ g0 = apply_realized(RealizedKind::J0, basis, p);
    compare(g0.coeff(n) / norm_n, j0(n, n));
    stray(g0, n);

    const PolyInZ gp = apply_realized(RealizedKind::Jplus, basis, p);
    compare(gp.coeff(n + 1) / basis_norm(n + 1, p), jp(n + 1, n));
    stray(gp, n + 1);

    const PolyInZ gm = apply_realized(RealizedKind::Jminus, basis, p);
    if (n > 0) {
      compare(gm.coeff(n - 1) / basis_norm(n - 1, p), jm(n - 1, n));
      stray(gm, n - 1);
    } else {
      stray(gm, -1);
    }
  }
  return worst;
}

namespace {

void guard_z(double z) {
  if (!(std::abs(z) <= 0.9)) throw DomainError("generating sum: |z| <= 0.9 required for convergence");
}

// Direct power series for 2F1(A, B; C; t), |t| < 1.
std::complex<double> hyp2f1_series(std::complex<double> A, std::complex<double> B, std::complex<double> C, double t) {
  constexpr int kMaxTerms = 500;
  std::complex<double> term = 1.0;
  std::complex<double> sum = 1.0;
  for (int k = 0; k < kMaxTerms; ++k) {
    term *= (A + double(k)) * (B + double(k)) / ((C + double(k)) * double(k + 1)) * t;
    sum += term;
    if (std::abs(term) <= 1e-16 * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace

double generating_sum(double x, double z, const ModelParams& p, Parity parity, int nterms) {
  guard_z(z);
  if (nterms < 0) throw DomainError("generating_sum: negative nterms");
  const int offset = parity == Parity::even ? 0 : 1;
  const std::vector<double> psi = psi_vector(x, 2 * nterms + 1, p);
  const double z2 = z * z;
  double zpow = parity == Parity::even ? 1.0 : z;
  double sum = 0.0;
  for (int n = 0; n <= nterms; ++n) {
    const int k = 2 * n + offset;
    sum += psi[k] * basis_norm(k, p) * zpow;
    zpow *= z2;
  }
  return sum;
}

std::complex<double> generating_closed_form(double x, double z, const ModelParams& p, Parity parity) {
  guard_z(z);
  if (p.b() != 0.0) throw DomainError("generating_closed_form: defined for b = 0 only");
  const double a = p.a(), c = p.c();
  const double psi0 = psi_vector(x, 0, p)[0];
  const double t = -z * z;
  const std::complex<double> ix(0.0, x);
  const std::complex<double> power = std::exp((-a + ix) * std::log1p(z * z));
  if (parity == Parity::even) return psi0 * power * hyp2f1_series(ix, c + ix, c, t);
  return psi0 * (x * z / c) * power * hyp2f1_series(1.0 + ix, c + ix, 1.0 + c, t);
}

}  // namespace su11g
