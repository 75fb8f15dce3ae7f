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

#include <Eigen/Dense>

#include "qrotor/qnum.hpp"
#include "qrotor/spin.hpp"

namespace qrotor {

/// J_z, J_+ and J_- of the (2j+1)-dimensional SU_q(2) irrep, hbar = 1.
///
/// Basis |j m>, m = -j..j, index m + j. Entries are real: in the l >> j
/// regime every bracket under the square root is nonnegative.
struct IrrepMatrices {
  Spin j;
  Deformation deformation;
  Eigen::MatrixXd jz;
  Eigen::MatrixXd jplus;
  Eigen::MatrixXd jminus;

  int dim() const { return j.multiplicity(); }
  /// m of basis index k.
  double m_of(int k) const { return k - j.value(); }
};

/// <j,m+1|J+|j,m> = sqrt([j-m][j+m+1]), J- = J+^T, J_z = diag(m).
/// Throws RegimeError when a bracket product under the square root is
/// negative, DomainError for j < 0.
IrrepMatrices build_irrep(Spin j, const Deformation& deformation);

/// diag([scale*m + shift]) over the irrep basis.
Eigen::MatrixXd bracket_of_jz(const IrrepMatrices& irrep, double scale,
                              double shift);

/// C2 = [J_z][J_z+1] + J- J+.
Eigen::MatrixXd casimir_matrix(const IrrepMatrices& irrep);

/// max(|[J+,J-] - [2J_z]|, |[J_z,J+] - J+|, |[J_z,J-] + J-|), max-norm.
double check_commutators(const IrrepMatrices& irrep);

/// |C2 - [j][j+1] I|, max-norm.
double check_casimir(const IrrepMatrices& irrep);

}  // namespace qrotor
