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

#ifndef SU11G_REPALGEBRA_HPP
#define SU11G_REPALGEBRA_HPP

#include <limits>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace su11g {

/// Model parameters: representation label a, deformation label c and the
/// optional third parameter b of the further-deformed algebra. gamma is
/// always (2a-1)(2c-1).
class ModelParams {
 public:
  double a() const { return a_; }
  double c() const { return c_; }
  double b() const { return b_; }
  double gamma() const { return gamma_; }

  /// gamma != 0.
  bool deformed() const { return gamma_ != 0.0; }
  /// b > 0: the three-parameter variant.
  bool b_deformed() const { return b_ > 0.0; }
  /// B(a, c) <= pi, i.e. |psi_0(0)|^2 <= 1. Guaranteed for a, c >= 1/2.
  bool physically_acceptable() const;

  friend ModelParams make_params(double a, double c, double b);

 private:
  ModelParams(double a, double c, double b) : a_(a), c_(c), b_(b), gamma_((2 * a - 1) * (2 * c - 1)) {}

  double a_;
  double c_;
  double b_;
  double gamma_;
};

/// Throws DomainError unless a > 0, c > 0, b >= 0 (all finite).
ModelParams make_params(double a, double c, double b = 0.0);

struct Interval {
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
};

/// Open intervals of admissible a for a fixed gamma != 0. Throws DomainError
/// for gamma == 0, where every a > 0 is admissible.
std::vector<Interval> allowed_a_interval(double gamma);

enum class OperatorKind { R, J0, Jplus, Jminus, Q, P, H };

std::string_view to_string(OperatorKind kind);

/// Truncation of an operator to span{|a,0>, ..., |a,N-1>}. Immutable.
class OperatorMatrix {
 public:
  OperatorMatrix(OperatorKind kind, Eigen::MatrixXcd entries) : kind_(kind), entries_(std::move(entries)) {}

  OperatorKind kind() const { return kind_; }
  int dim() const { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXcd& entries() const { return entries_; }
  std::complex<double> operator()(int row, int col) const { return entries_(row, col); }

 private:
  OperatorKind kind_;
  Eigen::MatrixXcd entries_;
};

/// Coefficient of |a,n+1> in J+ |a,n>.
double raising_coeff(int n, const ModelParams& p);
/// Coefficient of |a,n-1> in J- |a,n>; zero for n = 0.
double lowering_coeff(int n, const ModelParams& p);
/// J0 eigenvalue n + a + b + c - 1/2.
double j0_eigenvalue(int n, const ModelParams& p);
/// <a,n+1| q |a,n> = raising_coeff(n) / 2.
double q_offdiag(int n, const ModelParams& p);

/// Builds the N x N truncation (N >= 2). The Hamiltonian is J0 - (b + c - 1/2),
/// so its spectrum is n + a for every b.
OperatorMatrix build_operator(OperatorKind kind, const ModelParams& p, int n_dim);

/// max |(AB - BA - expected)_{ij}| over the leading interior x interior block.
double commutator_residual(const OperatorMatrix& lhs, const OperatorMatrix& rhs,
                           const Eigen::MatrixXcd& expected, int interior);
double commutator_residual(const OperatorMatrix& lhs, const OperatorMatrix& rhs,
                           const OperatorMatrix& expected, int interior);

/// Same for the anticommutator AB + BA.
double anticommutator_residual(const OperatorMatrix& lhs, const OperatorMatrix& rhs,
                               const Eigen::MatrixXcd& expected, int interior);

/// Eigenvalues (ascending) of the n_dim x n_dim truncated position operator.
/// Accepts n_dim >= 1.
std::vector<double> q_truncated_eigenvalues(const ModelParams& p, int n_dim);

}  // namespace su11g

#endif  // SU11G_REPALGEBRA_HPP
