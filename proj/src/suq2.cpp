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

#include "qrotor/suq2.hpp"

#include <algorithm>
#include <cmath>

#include "qrotor/bp_space.hpp"
#include "qrotor/error.hpp"

namespace qrotor {

IrrepMatrices build_irrep(Spin j, const Deformation& deformation) {
  if (j.twice() < 0) throw DomainError("negative spin " + j.to_string());
  IrrepMatrices irrep{j, deformation, {}, {}, {}};
  const int n = irrep.dim();
  const double jv = j.value();
  irrep.jz = Eigen::MatrixXd::Zero(n, n);
  irrep.jplus = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    const double m = irrep.m_of(k);
    irrep.jz(k, k) = m;
    if (k + 1 < n) {
      const double product =
          bracket(jv - m, deformation) * bracket(jv + m + 1.0, deformation);
      if (product < 0.0) {
        throw RegimeError("negative bracket product for j = " + j.to_string() +
                          ", m = " + std::to_string(m) +
                          ": the space is too small for this irrep");
      }
      irrep.jplus(k + 1, k) = std::sqrt(product);
    }
  }
  irrep.jminus = irrep.jplus.transpose();
  return irrep;
}

Eigen::MatrixXd bracket_of_jz(const IrrepMatrices& irrep, double scale,
                              double shift) {
  Eigen::VectorXd diag(irrep.dim());
  for (int k = 0; k < irrep.dim(); ++k) {
    diag(k) = bracket(scale * irrep.m_of(k) + shift, irrep.deformation);
  }
  return diag.asDiagonal();
}

Eigen::MatrixXd casimir_matrix(const IrrepMatrices& irrep) {
  return bracket_of_jz(irrep, 1.0, 0.0) * bracket_of_jz(irrep, 1.0, 1.0) +
         irrep.jminus * irrep.jplus;
}

double check_commutators(const IrrepMatrices& irrep) {
  const auto& jp = irrep.jplus;
  const auto& jm = irrep.jminus;
  const auto& jz = irrep.jz;
  const double ladder = max_norm(jp * jm - jm * jp - bracket_of_jz(irrep, 2.0, 0.0));
  const double raise = max_norm(jz * jp - jp * jz - jp);
  const double lower = max_norm(jz * jm - jm * jz + jm);
  return std::max({ladder, raise, lower});
}

double check_casimir(const IrrepMatrices& irrep) {
  const double eigen = casimir_eigenvalue(irrep.j, irrep.deformation);
  const Eigen::MatrixXd identity =
      Eigen::MatrixXd::Identity(irrep.dim(), irrep.dim());
  return max_norm(casimir_matrix(irrep) - eigen * identity);
}

}  // namespace qrotor
