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

#include "qrotor/bp_space.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qrotor/error.hpp"

namespace qrotor {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double BPSpace::theta(int n) const {
  return theta0() + kTwoPi * n / dim();
}

Eigen::VectorXcd BPSpace::m_state(Spin m) const {
  if (m < -l() || m > l() || !m.is_integer()) {
    throw DomainError("m = " + m.to_string() + " outside the space");
  }
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim());
  v(index_of(m)) = 1.0;
  return v;
}

BPSpace build_space(Spin l, double theta0, int max_dim) {
  if (l.twice() < 0 || !l.is_integer()) {
    throw DomainError("l must be a nonnegative integer so that 2l+1 is odd, got " +
                      l.to_string());
  }
  const int dim = l.multiplicity();
  if (dim > max_dim) {
    throw DomainError("space dimension " + std::to_string(dim) +
                      " exceeds the configured maximum " +
                      std::to_string(max_dim));
  }
  BPSpace space{QParameter(dim, theta0)};
  const int lv = (dim - 1) / 2;
  const double norm = 1.0 / std::sqrt(static_cast<double>(dim));

  // <m|theta_n> = exp(-i m theta_n) / sqrt(D).
  space.angle_basis_.resize(dim, dim);
  Eigen::VectorXcd phases(dim);
  for (int n = 0; n < dim; ++n) {
    const double th = space.theta(n);
    phases(n) = std::polar(1.0, th);
    for (int k = 0; k < dim; ++k) {
      const int m = k - lv;
      // Reduce m*theta_n mod 2 pi on the grid part to keep the phase exact
      // for large D.
      const double grid = kTwoPi * static_cast<double>((static_cast<long>(m) * n) % dim) / dim;
      space.angle_basis_(k, n) = std::polar(norm, -(m * theta0 + grid));
    }
  }
  space.exp_iphi_ = space.angle_basis_ * phases.asDiagonal() *
                    space.angle_basis_.adjoint();

  // q^m with q = exp(-i 2 pi / D).
  Eigen::VectorXcd qm(dim);
  for (int k = 0; k < dim; ++k) {
    qm(k) = std::polar(1.0, -kTwoPi * (k - lv) / dim);
  }
  space.q_jz_ = qm.asDiagonal();
  return space;
}

double check_quantum_plane(const BPSpace& space) {
  const auto qjz = space.q_jz().diagonal().asDiagonal();
  const Eigen::MatrixXcd lhs = qjz * space.exp_iphi();
  const Eigen::MatrixXcd rhs = space.q() * (space.exp_iphi() * qjz);
  return max_norm(lhs - rhs);
}

Eigen::MatrixXcd cyclic_raising(int dim, std::complex<double> corner) {
  Eigen::MatrixXcd shift = Eigen::MatrixXcd::Zero(dim, dim);
  for (int k = 0; k + 1 < dim; ++k) shift(k + 1, k) = 1.0;
  shift(0, dim - 1) = corner;
  return shift;
}

double check_cyclic_shift(const BPSpace& space) {
  const auto corner = std::polar(1.0, space.dim() * space.theta0());
  return max_norm(space.exp_iphi() - cyclic_raising(space.dim(), corner));
}

}  // namespace qrotor
