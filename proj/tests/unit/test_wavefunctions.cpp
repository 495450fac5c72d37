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

#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "doctest.h"
#include "oracles/oracle_values.hpp"
#include "su11g/error.hpp"
#include "su11g/wavefunctions.hpp"

using namespace su11g;

namespace {

constexpr double kPi = std::numbers::pi;

double beta_fn(double a, double c) { return std::exp(std::lgamma(a) + std::lgamma(c) - std::lgamma(a + c)); }

}  // namespace

TEST_CASE("weight_w: examples and oracles") {
  CHECK(weight_w(0.0, make_params(1, 1)) == doctest::Approx(1.0 / kPi).epsilon(1e-14));
  CHECK(weight_w(0.0, make_params(0.5, 0.5)) == doctest::Approx(kPi).epsilon(1e-14));
  const auto p = make_params(0.8, 1.9);
  CHECK(std::abs(weight_w(2.7, p) - weight_w(-2.7, p)) <= 1e-14 * weight_w(2.7, p));
  for (const auto& o : oracle::kWeight) {
    CAPTURE(o.x);
    CHECK(weight_w(o.x, make_params(o.a, o.c)) == doctest::Approx(o.value).epsilon(1e-12));
  }
  CHECK(weight_w(400.0, make_params(1, 1)) >= 0.0);
  CHECK_THROWS_AS(weight_w(0.0, make_params(1, 1, 0.5)), DomainError);
}

TEST_CASE("psi_closed: examples") {
  for (auto [a, c] : {std::pair{1.0, 1.0}, std::pair{0.7, 2.2}, std::pair{3.0, 0.4}})
    CHECK(psi_closed(0, 0.0, make_params(a, c)) == doctest::Approx(std::sqrt(beta_fn(a, c) / kPi)).epsilon(1e-13));
  CHECK(psi_closed(0, 0.0, make_params(0.5, 0.5)) == doctest::Approx(1.0).epsilon(1e-14));
  for (int n : {1, 3, 7, 21}) CHECK(psi_closed(n, 0.0, make_params(1.2, 0.9)) == 0.0);
  CHECK_THROWS_AS(psi_closed(2, 0.1, make_params(1, 1, 0.25)), DomainError);
  CHECK_THROWS_AS(psi_closed(-1, 0.1, make_params(1, 1)), DomainError);
}

TEST_CASE("psi_closed: high-precision oracles") {
  for (const auto& o : oracle::kPsi) {
    CAPTURE(o.n);
    CAPTURE(o.x);
    CHECK(std::abs(psi_closed(o.n, o.x, make_params(o.a, o.c)) - o.value) <= 1e-11);
  }
}

TEST_CASE("psi_closed: parity") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> xs(0.0, 6.0), par(0.2, 3.0);
  for (int t = 0; t < 30; ++t) {
    const auto p = make_params(par(rng), par(rng));
    const double x = xs(rng);
    for (int n = 0; n <= 20; ++n) {
      const auto v = psi_closed_eval(n, x, p);
      const double m = psi_closed(n, -x, p);
      CHECK(std::abs(m - (n % 2 ? -1.0 : 1.0) * v.value) <= 1e-12 * std::max(std::abs(v.value), v.scale));
    }
  }
}

TEST_CASE("psi0(0)^2 = B(a,c)/pi") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> par(0.1, 4.0);
  for (int t = 0; t < 20; ++t) {
    const double a = par(rng), c = par(rng);
    const double v = psi_closed(0, 0.0, make_params(a, c));
    CHECK(std::abs(v * v - beta_fn(a, c) / kPi) <= 1e-12 * beta_fn(a, c) / kPi);
  }
}

TEST_CASE("coeff_recurrence: first coefficients") {
  const double a = 1.3, c = 0.7, x = 0.9;
  const auto p = make_params(a, c);
  const auto v = coeff_recurrence(x, 4, p);
  REQUIRE(v.coeffs.size() == 5);
  const double a0 = 1.0 / std::sqrt(std::tgamma(a) * std::tgamma(c) * std::tgamma(a + c));
  CHECK(v.coeffs[0] == doctest::Approx(a0).epsilon(1e-14));
  CHECK(coeff_recurrence(-3.1, 2, p).coeffs[0] == v.coeffs[0]);
  const double a1 = x * a0 / std::sqrt(a * c);
  CHECK(v.coeffs[1] == doctest::Approx(a1).epsilon(1e-14));
  CHECK(v.coeffs[2] == doctest::Approx((x * a1 - std::sqrt(a * c) * a0) / std::sqrt(a + c)).epsilon(1e-14));
  const auto z = coeff_recurrence(0.0, 9, p);
  for (int k = 1; k <= 9; k += 2) CHECK(z.coeffs[k] == 0.0);
  CHECK_THROWS_AS(coeff_recurrence(0.5, 0, p), DomainError);
}

TEST_CASE("route agreement: closed form vs recurrence, n <= 30") {
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> xs(-6.0, 6.0), par(0.15, 3.5);
  for (int t = 0; t < 50; ++t) {
    const double x = xs(rng);
    const auto p = make_params(par(rng), par(rng));
    const auto rec = coeff_recurrence(x, 30, p);
    const auto vec = psi_vector(x, 30, p);
    const double sw = std::sqrt(weight_w(x, p));
    for (int k = 0; k <= 30; ++k) {
      const auto cl = psi_closed_eval(k, x, p);
      const double scale = std::max(std::abs(cl.value), cl.scale);
      CAPTURE(k);
      CHECK(std::abs(sw * rec.coeffs[k] - cl.value) <= 1e-9 * scale);
      CHECK(std::abs(vec[k] - cl.value) <= 1e-9 * scale);
    }
    CHECK(position_eigen_residual(x, rec.coeffs, p) <= 1e-10);
  }
}

TEST_CASE("psi_vector survives large |x| where w underflows on its own") {
  const auto p = make_params(1.0, 2.0);
  const auto v = psi_vector(260.0, 40, p);
  for (double e : v) CHECK(std::isfinite(e));
  CHECK(std::abs(v[7] - psi_closed(7, 260.0, p)) <= 1e-9 * std::max(std::abs(v[7]), 1e-300) + 1e-300);
}

TEST_CASE("phi_mp_fn") {
  for (double x : {0.0, 0.4, -1.3, 2.0}) CHECK(phi_mp_fn(0, x, 0.5) == doctest::Approx(1.0 / std::sqrt(std::cosh(kPi * x))).epsilon(1e-13));
  CHECK(phi_mp_fn(1, 0.0, 1.7) == 0.0);
  for (const auto& o : oracle::kPhi) {
    CAPTURE(o.n);
    CHECK(std::abs(phi_mp_fn(o.n, o.x, o.a) - o.value) <= 1e-12);
  }
}

TEST_CASE("c = 1/2 reduction holds pointwise") {
  for (double a : {0.7, 1.0, 2.0})
    for (int n = 0; n <= 10; ++n)
      for (double x = -8.0; x <= 8.0; x += 0.37) CHECK(std::abs(psi_closed(n, x, make_params(a, 0.5)) - phi_mp_fn(n, x, a)) <= 1e-10);
}

TEST_CASE("psi_paraboson") {
  for (double xi : {0.0, 0.3, 1.7}) CHECK(psi_paraboson(0, xi, 0.5) == doctest::Approx(std::pow(kPi, -0.25) * std::exp(-xi * xi / 2)).epsilon(1e-14));
  CHECK(psi_paraboson(0, 0.0, 2.0) == 0.0);
  CHECK(std::isinf(psi_paraboson(0, 0.0, 0.3)));
  for (const auto& o : oracle::kParaboson) {
    CAPTURE(o.n);
    CHECK(std::abs(psi_paraboson(o.n, o.x, o.a) - o.value) <= 1e-13);
  }
  // a = 1/2: Hermite functions, e.g. n = 1 is sqrt(2) pi^{-1/4} xi e^{-xi^2/2}.
  CHECK(psi_paraboson(1, 0.8, 0.5) == doctest::Approx(std::sqrt(2.0) * std::pow(kPi, -0.25) * 0.8 * std::exp(-0.32)).epsilon(1e-13));
}

TEST_CASE("odd paraboson functions are the c -> infinity limit of psi_{2n+1}") {
  const double a = 1.5, c = 1e6;
  const auto p = make_params(a, c);
  for (int n : {1, 3, 5})
    for (double xi : {0.5, 1.2, 2.5}) CHECK(std::abs(std::pow(c, 0.25) * psi_closed(n, std::sqrt(c) * xi, p) - psi_paraboson(n, xi, a)) < 1e-4);
}

TEST_CASE("momentum coefficients") {
  const auto p = make_params(1, 2);
  CHECK(momentum_coeff(0, 0.8, p) == std::complex<double>(psi_closed(0, 0.8, p), 0.0));
  CHECK(momentum_coeff(2, 0.8, p).real() == doctest::Approx(-psi_closed(2, 0.8, p)));
  CHECK(momentum_coeff(1, 0.8, p).imag() == doctest::Approx(psi_closed(1, 0.8, p)));
  CHECK(momentum_eigen_residual(1.3, 20, p) <= 1e-10);
}

TEST_CASE("tabulate: level-major layout and thread safety") {
  const auto p = make_params(1, 2);
  std::vector<double> grid;
  for (int k = 0; k <= 200; ++k) grid.push_back(-5.0 + 0.05 * k);
  const auto all = tabulate(WaveFamily::psi, 5, grid, p);
  REQUIRE(all.size() == 6 * grid.size());
  CHECK(all[grid.size()].n == 1);
  CHECK(all[grid.size()].x == grid[0]);
  for (const auto& s : all)
    if (s.n % 2 == 1 && s.x == 0.0) CHECK(s.value == 0.0);

  const std::span<const double> g(grid);
  std::vector<WaveSample> left, right;
  std::thread t1([&] { left = tabulate(WaveFamily::psi, 5, g.subspan(0, 100), p); });
  std::thread t2([&] { right = tabulate(WaveFamily::psi, 5, g.subspan(100), p); });
  t1.join();
  t2.join();
  for (int n = 0; n <= 5; ++n) {
    for (std::size_t k = 0; k < 100; ++k) CHECK(left[n * 100 + k].value == all[n * grid.size() + k].value);
    for (std::size_t k = 0; k < right.size() / 6; ++k)
      CHECK(right[n * (grid.size() - 100) + k].value == all[n * grid.size() + 100 + k].value);
  }

  const auto mp = tabulate(WaveFamily::phi_mp, 2, grid, p);
  CHECK(mp[3].value == phi_mp_fn(0, grid[3], 1.0));
  const auto pb = tabulate(WaveFamily::psi_paraboson, 2, grid, p);
  CHECK(pb.back().value == psi_paraboson(2, grid.back(), 1.0));
}
