// Copyright 2026 The qrotor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>

#include <Eigen/Dense>

#include "qrotor/qnum.hpp"
#include "qrotor/spin.hpp"

namespace qrotor {

inline constexpr int kDefaultMaxSpaceDim = 1001;

/// Dense realization of a (2l+1)-dimensional angle/angular-momentum space.
///
/// Matrices are written in the |m> basis, m = -l..l, with row/column index
/// m + l. The q of this space is exp(-i 2 pi / D); the energy formula uses
/// tau = +2 pi / D, and the real bracket is insensitive to that sign.
/// Immutable after construction.
class BPSpace {
 public:
  const QParameter& qp() const { return qp_; }
  int dim() const { return qp_.dim(); }
  Spin l() const { return qp_.l(); }
  double theta0() const { return qp_.theta0(); }
  /// exp(-i 2 pi / D).
  std::complex<double> q() const { return std::conj(qp_.q()); }

  /// theta_n = theta0 + 2 pi n / D.
  double theta(int n) const;
  int index_of(Spin m) const { return (m + l()).twice() / 2; }

  /// exp(i Phi) = sum_n exp(i theta_n) |theta_n><theta_n|.
  const Eigen::MatrixXcd& exp_iphi() const { return exp_iphi_; }
  /// exp(-i Phi), the adjoint of exp_iphi().
  Eigen::MatrixXcd exp_minus_iphi() const { return exp_iphi_.adjoint(); }
  /// q^{J_z} = diag(q^m).
  const Eigen::MatrixXcd& q_jz() const { return q_jz_; }
  /// Column n holds |theta_n> in the |m> basis.
  const Eigen::MatrixXcd& angle_basis() const { return angle_basis_; }

  Eigen::VectorXcd m_state(Spin m) const;
  Eigen::VectorXcd angle_state(int n) const { return angle_basis_.col(n); }

 private:
  friend BPSpace build_space(Spin l, double theta0, int max_dim);
  explicit BPSpace(QParameter qp) : qp_(qp) {}

  QParameter qp_;
  Eigen::MatrixXcd exp_iphi_;
  Eigen::MatrixXcd q_jz_;
  Eigen::MatrixXcd angle_basis_;
};

/// Builds the space of dimension 2l+1. Throws DomainError when l is not an
/// integer (the dimension must be odd), when 2l+1 < 3, or when 2l+1 exceeds
/// max_dim.
BPSpace build_space(Spin l, double theta0 = 0.0,
                    int max_dim = kDefaultMaxSpaceDim);

/// Max-norm of q^{J_z} exp(i Phi) - q exp(i Phi) q^{J_z}.
double check_quantum_plane(const BPSpace& space);

/// Cyclic raising matrix: |m> -> |m+1>, |l> -> corner |-l>.
Eigen::MatrixXcd cyclic_raising(int dim, std::complex<double> corner);

/// Max-norm distance of exp(i Phi) from the cyclic raising matrix with
/// corner phase exp(i D theta0).
double check_cyclic_shift(const BPSpace& space);

/// Largest entry modulus.
template <typename Derived>
double max_norm(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace qrotor
