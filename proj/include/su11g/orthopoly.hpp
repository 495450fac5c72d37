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

#ifndef SU11G_ORTHOPOLY_HPP
#define SU11G_ORTHOPOLY_HPP

namespace su11g {

/// Continuous dual Hahn polynomial S_n(x2; a, b, c). x2 is the squared
/// spectral variable and may be negative (formal b-deformed solutions).
struct CdhQuery {
  int n = 0;
  double x2 = 0.0;
  double a = 1.0;
  double b = 0.0;
  double c = 1.0;
};

/// Meixner-Pollaczek polynomial P_n^{(a)}(x; pi/2).
struct MpQuery {
  int n = 0;
  double x = 0.0;
  double a = 1.0;
};

/// A polynomial value together with the largest absolute summand that went
/// into it (same units as the value). Residual tolerances are relative to it.
struct PolyValue {
  double value = 0.0;
  double scale = 0.0;
};

/// S_n = (a+b)_n (a+c)_n 3F2(-n, a+ix, a-ix; a+b, a+c; 1).
PolyValue cdh_eval(const CdhQuery& q);
double cdh(const CdhQuery& q);

/// P_n = (2a)_n / n! * i^n * 2F1(-n, a+ix; 2a; 2).
PolyValue mp_eval(const MpQuery& q);
double mp(const MpQuery& q);

/// Generalized Laguerre L_n^{(alpha)}(t) by the three-term recurrence in n.
double laguerre(int n, double alpha, double t);

/// Residuals of the two difference relations linking S_n(.; a, b, c) with
/// S_n(.; a, b+1, c); both vanish in exact arithmetic.
///   r1 = (x^2+b^2) S_n(a,b+1,c) - (n+a+b)(n+b+c) S_n(a,b,c) + S_{n+1}(a,b,c)
///   r2 = S_n(a,b,c) - S_n(a,b+1,c) + n(n+a+c-1) S_{n-1}(a,b+1,c)
/// scale1/scale2 bound the magnitude of the individual contributions.
struct DiffResiduals {
  double r1 = 0.0;
  double r2 = 0.0;
  double scale1 = 0.0;
  double scale2 = 0.0;

  double relative1() const { return scale1 > 0.0 ? r1 / scale1 : r1; }
  double relative2() const { return scale2 > 0.0 ? r2 / scale2 : r2; }
};

DiffResiduals cdh_diff_residuals(int n, double x, double a, double b, double c);

}  // namespace su11g

#endif  // SU11G_ORTHOPOLY_HPP
