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

#include "su11g/repalgebra.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "su11g/error.hpp"
#include "su11g/specfun.hpp"

namespace su11g {

bool ModelParams::physically_acceptable() const {
  const double log_beta = std::lgamma(a_) + std::lgamma(c_) - std::lgamma(a_ + c_);
  return log_beta <= std::log(std::numbers::pi);
}

ModelParams make_params(double a, double c, double b) {
  if (!std::isfinite(a) || !std::isfinite(c) || !std::isfinite(b) || a <= 0.0 || c <= 0.0 || b < 0.0) {
    std::ostringstream os;
    os << "make_params: need a > 0, c > 0, b >= 0 (got a=" << a << ", c=" << c << ", b=" << b << ")";
    throw DomainError(os.str());
  }
  return ModelParams(a, c, b);
}

std::vector<Interval> allowed_a_interval(double gamma) {
  if (!std::isfinite(gamma)) throw DomainError("allowed_a_interval: non-finite gamma");
  if (gamma == 0.0) throw DomainError("allowed_a_interval: undefined for gamma = 0 (every a > 0 is allowed)");
  const double inf = std::numeric_limits<double>::infinity();
  if (gamma < 0.0) return {{0.0, 0.5}, {(1.0 - gamma) / 2.0, inf}};
  if (gamma < 1.0) return {{0.0, (1.0 - gamma) / 2.0}, {0.5, inf}};
  return {{0.5, inf}};
}

std::string_view to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::R: return "R";
    case OperatorKind::J0: return "J0";
    case OperatorKind::Jplus: return "Jplus";
    case OperatorKind::Jminus: return "Jminus";
    case OperatorKind::Q: return "Q";
    case OperatorKind::P: return "P";
    case OperatorKind::H: return "H";
  }
  return "?";
}

namespace {

double checked_sqrt(double arg, const char* who, int n) {
  if (!(arg > 0.0)) {
    std::ostringstream os;
    os << who << ": non-positive square-root argument " << arg << " at n = " << n;
    throw DomainError(os.str());
  }
  return std::sqrt(arg);
}

}  // namespace

double raising_coeff(int n, const ModelParams& p) {
  const double a = p.a(), b = p.b(), c = p.c();
  if (n < 0) throw DomainError("raising_coeff: negative index");
  if (n % 2 == 0) return checked_sqrt((n + 2 * a + 2 * b) * (n + 2 * b + 2 * c), "J+", n);
  return checked_sqrt((n + 1) * (n + 2 * a + 2 * c - 1), "J+", n);
}

double lowering_coeff(int n, const ModelParams& p) {
  if (n < 0) throw DomainError("lowering_coeff: negative index");
  if (n == 0) return 0.0;
  // n even: n(n+2a+2c-2); n odd: (n+2a+2b-1)(n+2b+2c-1). Both equal the J+
  // factor at n-1, and sharing that evaluation makes J-^T == J+ bit for bit.
  return raising_coeff(n - 1, p);
}

double j0_eigenvalue(int n, const ModelParams& p) { return n + p.a() + p.b() + p.c() - 0.5; }

double q_offdiag(int n, const ModelParams& p) { return 0.5 * raising_coeff(n, p); }

OperatorMatrix build_operator(OperatorKind kind, const ModelParams& p, int n_dim) {
  if (n_dim < 2) throw DomainError("build_operator: need N >= 2");
  const std::complex<double> i(0.0, 1.0);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n_dim, n_dim);
  switch (kind) {
    case OperatorKind::R:
      for (int n = 0; n < n_dim; ++n) m(n, n) = (n % 2 == 0) ? 1.0 : -1.0;
      break;
    case OperatorKind::J0:
      for (int n = 0; n < n_dim; ++n) m(n, n) = j0_eigenvalue(n, p);
      break;
    case OperatorKind::H:
      for (int n = 0; n < n_dim; ++n) m(n, n) = j0_eigenvalue(n, p) - (p.b() + p.c() - 0.5);
      break;
    case OperatorKind::Jplus:
      for (int n = 0; n + 1 < n_dim; ++n) m(n + 1, n) = raising_coeff(n, p);
      break;
    case OperatorKind::Jminus:
      for (int n = 1; n < n_dim; ++n) m(n - 1, n) = lowering_coeff(n, p);
      break;
    case OperatorKind::Q:
      for (int n = 0; n + 1 < n_dim; ++n) {
        m(n + 1, n) = 0.5 * raising_coeff(n, p);
        m(n, n + 1) = 0.5 * lowering_coeff(n + 1, p);
      }
      break;
    case OperatorKind::P:
      for (int n = 0; n + 1 < n_dim; ++n) {
        m(n + 1, n) = 0.5 * i * raising_coeff(n, p);
        m(n, n + 1) = -0.5 * i * lowering_coeff(n + 1, p);
      }
      break;
  }
  return OperatorMatrix(kind, std::move(m));
}

namespace {

void check_dims(const OperatorMatrix& lhs, const OperatorMatrix& rhs, const Eigen::MatrixXcd& expected,
                int interior) {
  const int n = lhs.dim();
  if (rhs.dim() != n || expected.rows() != n || expected.cols() != n) {
    throw DimensionError("commutator_residual: operand dimensions differ");
  }
  if (interior < 0 || interior > n - 2) {
    throw DimensionError("commutator_residual: interior block must satisfy 0 <= interior <= N - 2");
  }
}

double block_max(const Eigen::MatrixXcd& m, int interior) {
  if (interior == 0) return 0.0;
  return m.topLeftCorner(interior, interior).cwiseAbs().maxCoeff();
}

}  // namespace

double commutator_residual(const OperatorMatrix& lhs, const OperatorMatrix& rhs, const Eigen::MatrixXcd& expected,
                           int interior) {
  check_dims(lhs, rhs, expected, interior);
  const Eigen::MatrixXcd& x = lhs.entries();
  const Eigen::MatrixXcd& y = rhs.entries();
  return block_max(x * y - y * x - expected, interior);
}

double commutator_residual(const OperatorMatrix& lhs, const OperatorMatrix& rhs, const OperatorMatrix& expected,
                           int interior) {
  return commutator_residual(lhs, rhs, expected.entries(), interior);
}

double anticommutator_residual(const OperatorMatrix& lhs, const OperatorMatrix& rhs,
                               const Eigen::MatrixXcd& expected, int interior) {
  check_dims(lhs, rhs, expected, interior);
  const Eigen::MatrixXcd& x = lhs.entries();
  const Eigen::MatrixXcd& y = rhs.entries();
  return block_max(x * y + y * x - expected, interior);
}

std::vector<double> q_truncated_eigenvalues(const ModelParams& p, int n_dim) {
  if (n_dim < 1) throw DomainError("q_truncated_eigenvalues: need N >= 1");
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n_dim);
  if (n_dim == 1) return {0.0};
  Eigen::VectorXd sub(n_dim - 1);
  for (int n = 0; n + 1 < n_dim; ++n) sub(n) = q_offdiag(n, p);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ConvergenceError("q_truncated_eigenvalues: eigen-solve failed");
  const Eigen::VectorXd& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

}  // namespace su11g
