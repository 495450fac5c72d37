#!/usr/bin/env python3
# Copyright 2026 The su11g Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates oracle_values.hpp from mpmath at 60 digits.

The values are independent of the C++ code paths: hypergeometric functions
come from mpmath's own summation, wave functions from the defining formulas.
Run from this directory; the output is checked in and frozen.
"""
import mpmath as mp

mp.mp.dps = 60


def s_cdh(n, x2, a, b, c):
    x = mp.sqrt(mp.mpf(x2)) if x2 >= 0 else 1j * mp.sqrt(-mp.mpf(x2))
    ix = 1j * x
    v = mp.rf(a + b, n) * mp.rf(a + c, n) * mp.hyp3f2(-n, a + ix, a - ix, a + b, a + c, 1)
    return mp.re(v)


def weight(x, a, c):
    return abs(mp.gamma(a + 1j * x) * mp.gamma(c + 1j * x) / mp.gamma(mp.mpf(1) / 2 + 1j * x)) ** 2


def psi(n, x, a, c):
    x = mp.mpf(x)
    m = n // 2
    sw = mp.sqrt(weight(x, a, c))
    if n % 2 == 0:
        s = s_cdh(m, x * x, a, 0, c)
        den = mp.sqrt(mp.gamma(m + a) * mp.gamma(m + c) * mp.gamma(m + a + c) * mp.factorial(m))
        return (-1) ** m * sw * s / den
    s = s_cdh(m, x * x, a, 1, c)
    den = mp.sqrt(mp.gamma(m + a + 1) * mp.gamma(m + c + 1) * mp.gamma(m + a + c) * mp.factorial(m))
    return (-1) ** m * sw * x * s / den


def mp_poly(n, x, a):
    v = mp.rf(2 * a, n) / mp.factorial(n) * (1j) ** n * mp.hyp2f1(-n, a + 1j * x, 2 * a, 2)
    return mp.re(v)


def phi(n, x, a):
    pre = 2 ** a * mp.sqrt(mp.factorial(n)) / mp.sqrt(2 * mp.pi * mp.gamma(n + 2 * a))
    return pre * abs(mp.gamma(a + 1j * x)) * mp_poly(n, x, a)


def paraboson(n, xi, a):
    xi = mp.mpf(xi)
    m = n // 2
    if n % 2 == 0:
        return (-1) ** m * mp.sqrt(mp.factorial(m) / mp.gamma(m + a)) * abs(xi) ** (a - 0.5) * mp.exp(
            -xi * xi / 2) * mp.laguerre(m, a - 1, xi * xi)
    return (-1) ** m * mp.sqrt(mp.factorial(m) / mp.gamma(m + a + 1)) * abs(xi) ** (a - 0.5) * xi * mp.exp(
        -xi * xi / 2) * mp.laguerre(m, a, xi * xi)


def gen_closed(x, z, a, c, odd):
    ix = 1j * mp.mpf(x)
    psi0 = psi(0, x, a, c)
    z = mp.mpf(z)
    if not odd:
        return mp.re(psi0 * (1 + z * z) ** (-a + ix) * mp.hyp2f1(ix, c + ix, c, -z * z))
    return mp.re(psi0 * (x * z / c) * (1 + z * z) ** (-a + ix) * mp.hyp2f1(1 + ix, c + ix, 1 + c, -z * z))


def q_eigs(a, c, dim):
    def beta(n):
        m = n // 2
        return mp.sqrt((m + a) * (m + c)) if n % 2 == 0 else mp.sqrt((m + 1) * (m + a + c))
    M = mp.matrix(dim, dim)
    for n in range(dim - 1):
        M[n, n + 1] = M[n + 1, n] = beta(n)
    return sorted(mp.eigsy(M)[0])


def f(v):
    return mp.nstr(mp.mpf(v), 20, min_fixed=-mp.inf, max_fixed=mp.inf)


def main():
    out = []
    w = out.append
    w("// Generated by generate.py (mpmath, 60 digits). Do not edit by hand.")
    w("#ifndef SU11G_TESTS_ORACLE_VALUES_HPP")
    w("#define SU11G_TESTS_ORACLE_VALUES_HPP")
    w("")
    w("namespace oracle {")
    w("")
    w("struct LnGamma { double re, im, out_re, out_im; };")
    w("inline constexpr LnGamma kLnGamma[] = {")
    for z in [2 + 3j, -2.5 + 1.5j, 0.3 - 7j, 30 + 0.5j, -0.3 - 4j, -7.2 + 0.01j, -7.2 - 0.01j, 0.2 + 30j,
              -40.5 + 3j, 0.5 + 0.0j, 1e-3 + 1e-3j, 3.7 - 120j, -12.25 + 60j]:
        v = mp.loggamma(mp.mpc(z.real, z.imag))
        w(f"    {{{z.real!r}, {z.imag!r}, {f(v.real)}, {f(v.imag)}}},")
    w("};")
    w("")
    w("struct Cdh { int n; double x2, a, b, c, value; };")
    w("inline constexpr Cdh kCdh[] = {")
    for (n, x2, a, b, c) in [(0, 1.3, 1, 0, 1), (1, 0.49, 1, 0, 1), (3, 2.25, 0.7, 0.0, 1.6), (5, 6.25, 1.2, 1.0, 0.4),
                             (8, 0.01, 2.0, 0.5, 2.5), (12, 16.0, 0.6, 1.0, 0.6), (4, -0.25, 1.0, 0.5, 1.5),
                             (20, 9.0, 1.5, 0.0, 3.0)]:
        w(f"    {{{n}, {x2!r}, {a!r}, {b!r}, {c!r}, {f(s_cdh(n, x2, a, b, c))}}},")
    w("};")
    w("")
    w("struct Mp { int n; double x, a, value; };")
    w("inline constexpr Mp kMp[] = {")
    for (n, x, a) in [(0, 0.4, 1.0), (1, 0.4, 1.0), (2, -1.1, 0.7), (5, 2.3, 2.0), (9, 0.35, 0.5), (14, -3.0, 1.25)]:
        w(f"    {{{n}, {x!r}, {a!r}, {f(mp_poly(n, x, a))}}},")
    w("};")
    w("")
    w("struct Wave { int n; double x, a, c, value; };")
    w("inline constexpr Wave kPsi[] = {")
    for (n, x, a, c) in [(0, 0.0, 1.0, 1.0), (0, 1.5, 1.0, 2.0), (1, 0.8, 0.6, 0.6), (2, -2.1, 2.0, 0.5),
                         (3, 3.3, 0.5, 0.5), (6, 1.1, 1.3, 0.8), (9, -4.2, 0.3, 1.7), (16, 2.0, 1.0, 2.0),
                         (25, 5.5, 0.9, 1.4), (30, -7.0, 2.5, 3.5)]:
        w(f"    {{{n}, {x!r}, {a!r}, {c!r}, {f(psi(n, x, a, c))}}},")
    w("};")
    w("")
    w("struct Weight { double x, a, c, value; };")
    w("inline constexpr Weight kWeight[] = {")
    for (x, a, c) in [(0.0, 0.5, 0.5), (0.7, 1.0, 2.0), (-3.0, 0.3, 1.2), (12.0, 2.0, 2.0)]:
        w(f"    {{{x!r}, {a!r}, {c!r}, {f(weight(x, a, c))}}},")
    w("};")
    w("")
    w("struct Phi { int n; double x, a, value; };")
    w("inline constexpr Phi kPhi[] = {")
    for (n, x, a) in [(0, 0.0, 1.0), (1, 0.9, 1.0), (4, -1.7, 0.7), (7, 2.2, 2.0), (10, 0.3, 1.5)]:
        w(f"    {{{n}, {x!r}, {a!r}, {f(phi(n, x, a))}}},")
    w("};")
    w("inline constexpr Phi kParaboson[] = {")
    for (n, xi, a) in [(0, 0.5, 0.5), (1, 1.2, 0.5), (2, 0.8, 1.0), (3, 1.9, 2.0), (6, 0.35, 1.5), (5, -1.4, 0.75)]:
        w(f"    {{{n}, {xi!r}, {a!r}, {f(paraboson(n, xi, a))}}},")
    w("};")
    w("")
    w("struct Generating { double x, z, a, c; bool odd; double value; };")
    w("inline constexpr Generating kGenerating[] = {")
    for (x, z, a, c, odd) in [(0.7, 0.5, 1.3, 0.8, False), (0.7, 0.9, 1.3, 0.8, True), (-1.3, -0.9, 0.6, 2.0, True),
                              (2.4, 0.9, 2.0, 0.5, False)]:
        w(f"    {{{x!r}, {z!r}, {a!r}, {c!r}, {'true' if odd else 'false'}, {f(gen_closed(x, z, a, c, odd))}}},")
    w("};")
    w("")
    w("// Ascending eigenvalues of the 4 x 4 truncated position operator, (a, c) = (0.75, 1.5).")
    w("inline constexpr double kQEigen[] = {" + ", ".join(f(v) for v in q_eigs(mp.mpf("0.75"), mp.mpf("1.5"), 4)) + "};")
    w("")
    w("}  // namespace oracle")
    w("")
    w("#endif  // SU11G_TESTS_ORACLE_VALUES_HPP")
    with open("oracle_values.hpp", "w") as fh:
        fh.write("\n".join(out) + "\n")


if __name__ == "__main__":
    main()
