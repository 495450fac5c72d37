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

#include "su11g/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "su11g/error.hpp"

namespace su11g {

GaussRule gauss_legendre(int order) {
  if (order < 1) throw DomainError("gauss_legendre: order must be positive");
  GaussRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= order; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = order == 1 ? 1.0 : order * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[order - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[order - 1 - i] = w;
  }
  if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
  return rule;
}

namespace {

struct Panel {
  double lo;
  double hi;
};

class PanelIntegrator {
 public:
  PanelIntegrator(const VectorIntegrand& f, std::size_t comps, double sign, int order)
      : f_(f), comps_(comps), sign_(sign), rule_(gauss_legendre(order)), scratch_(comps) {}

  void integrate(Panel p, std::vector<double>& acc) {
    std::fill(acc.begin(), acc.end(), 0.0);
    const double mid = 0.5 * (p.lo + p.hi);
    const double half = 0.5 * (p.hi - p.lo);
    for (std::size_t i = 0; i < rule_.nodes.size(); ++i) {
      f_(sign_ * (mid + half * rule_.nodes[i]), scratch_);
      const double w = half * rule_.weights[i];
      for (std::size_t c = 0; c < comps_; ++c) acc[c] += w * scratch_[c];
    }
    ++evaluations_;
  }

  int evaluations() const { return evaluations_; }

 private:
  const VectorIntegrand& f_;
  std::size_t comps_;
  double sign_;
  GaussRule rule_;
  std::vector<double> scratch_;
  int evaluations_ = 0;
};

struct Accepted {
  double lo;
  std::vector<double> values;
};

std::vector<Panel> initial_panels(double halfwidth) {
  std::vector<Panel> panels = {{0.0, 0.25}, {0.25, 0.5}, {0.5, 1.0}, {1.0, 2.0}};
  for (double lo = 2.0; lo < halfwidth; lo += 2.0) panels.push_back({lo, std::min(lo + 2.0, halfwidth)});
  return panels;
}

// Adaptive bisection of [0, L] for f(sign * x).
std::vector<Accepted> integrate_half_line(const VectorIntegrand& f, std::size_t comps, double sign,
                                          double halfwidth, const QuadratureSpec& spec, int& budget,
                                          double& error) {
  PanelIntegrator integ(f, comps, sign, spec.panel_order);
  std::vector<Accepted> done;
  std::vector<Panel> stack = initial_panels(halfwidth);
  std::reverse(stack.begin(), stack.end());
  std::vector<double> coarse(comps), left(comps), right(comps);
  int used = 0;
  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();
    const double mid = 0.5 * (p.lo + p.hi);
    integ.integrate(p, coarse);
    integ.integrate({p.lo, mid}, left);
    integ.integrate({mid, p.hi}, right);
    used += 3;
    if (used > budget) {
      std::ostringstream os;
      os << "integrate_real_line: panel budget " << spec.max_panels << " exhausted near x = " << sign * p.lo;
      throw ConvergenceError(os.str());
    }
    bool ok = true;
    double panel_err = 0.0;
    const double abs_share = spec.abs_tol * (p.hi - p.lo) / halfwidth;
    for (std::size_t c = 0; c < comps; ++c) {
      const double fine = left[c] + right[c];
      const double diff = std::abs(fine - coarse[c]);
      panel_err = std::max(panel_err, diff);
      if (diff > std::max(abs_share, spec.rel_tol * std::abs(fine))) ok = false;
    }
    if (ok || p.hi - p.lo < 1e-10) {
      Accepted acc{p.lo, std::vector<double>(comps)};
      for (std::size_t c = 0; c < comps; ++c) acc.values[c] = left[c] + right[c];
      done.push_back(std::move(acc));
      error += panel_err;
    } else {
      stack.push_back({mid, p.hi});
      stack.push_back({p.lo, mid});
    }
  }
  budget -= used;
  std::sort(done.begin(), done.end(), [](const Accepted& x, const Accepted& y) { return x.lo < y.lo; });
  return done;
}

}  // namespace

double truncation_halfwidth(const VectorIntegrand& f, std::size_t components, Symmetry sym, double envelope_degree,
                            const QuadratureSpec& spec) {
  constexpr double kFloor = 40.0;
  const double cap = std::max(kFloor, spec.max_halfwidth);
  const double d = std::max(0.0, envelope_degree);
  std::vector<double> vals(components);
  double log_c = -std::numeric_limits<double>::infinity();
  for (int j = 0; j <= 16; ++j) {
    const double x = 20.0 + 1.25 * j;
    for (double sign : {1.0, -1.0}) {
      if (sign < 0.0 && sym != Symmetry::none) continue;
      f(sign * x, vals);
      for (double v : vals) {
        if (v != 0.0 && std::isfinite(v)) {
          log_c = std::max(log_c, std::log(std::abs(v)) - d * std::log(x) + std::numbers::pi * x);
        }
      }
    }
  }
  if (!std::isfinite(log_c)) return kFloor;
  const double target = std::log(spec.abs_tol / 10.0);
  double len = kFloor;
  for (int iter = 0; iter < 8; ++iter) {
    len = std::clamp((log_c + d * std::log(len) - target) / std::numbers::pi, kFloor, cap);
  }
  return len;
}

QuadratureResult integrate_real_line(const VectorIntegrand& f, std::size_t components, Symmetry sym,
                                     double envelope_degree, const QuadratureSpec& spec) {
  if (components == 0) throw DomainError("integrate_real_line: no components");
  if (!(spec.rel_tol > 0.0) || !(spec.abs_tol > 0.0) || spec.panel_order < 8) {
    throw DomainError("integrate_real_line: need positive tolerances and panel_order >= 8");
  }
  QuadratureResult res;
  res.values.assign(components, 0.0);
  if (sym == Symmetry::odd) return res;

  res.halfwidth = truncation_halfwidth(f, components, sym, envelope_degree, spec);
  int budget = spec.max_panels;
  std::vector<Accepted> pos = integrate_half_line(f, components, 1.0, res.halfwidth, spec, budget, res.error_estimate);
  if (sym == Symmetry::even) {
    for (const Accepted& a : pos) {
      for (std::size_t c = 0; c < components; ++c) res.values[c] += 2.0 * a.values[c];
    }
    res.error_estimate *= 2.0;
  } else {
    std::vector<Accepted> neg =
        integrate_half_line(f, components, -1.0, res.halfwidth, spec, budget, res.error_estimate);
    // Merge both sides by increasing |x|.
    std::vector<const Accepted*> all;
    for (const Accepted& a : pos) all.push_back(&a);
    for (const Accepted& a : neg) all.push_back(&a);
    std::stable_sort(all.begin(), all.end(), [](const Accepted* x, const Accepted* y) { return x->lo < y->lo; });
    for (const Accepted* a : all) {
      for (std::size_t c = 0; c < components; ++c) res.values[c] += a->values[c];
    }
  }
  res.panel_evaluations = spec.max_panels - budget;
  return res;
}

double integrate_real_line(const std::function<double(double)>& f, Symmetry sym, double envelope_degree,
                           const QuadratureSpec& spec) {
  const VectorIntegrand vf = [&f](double x, std::span<double> out) { out[0] = f(x); };
  return integrate_real_line(vf, 1, sym, envelope_degree, spec).values[0];
}

}  // namespace su11g
