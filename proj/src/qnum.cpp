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

#include "qrotor/qnum.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qrotor/error.hpp"

namespace qrotor {

QParameter::QParameter(int dim, double theta0)
    : dim_(dim), tau_(0.0), theta0_(theta0) {
  if (dim < 3 || dim % 2 == 0) {
    throw DomainError("space dimension must be odd and >= 3, got " +
                      std::to_string(dim));
  }
  if (!std::isfinite(theta0)) throw DomainError("theta0 must be finite");
  tau_ = 2.0 * std::numbers::pi / dim;
}

double sine_bracket(double x, double tau) {
  return std::sin(tau * x) / std::sin(tau);
}

double qbracket(double x, const QParameter& qp) {
  return sine_bracket(x, qp.tau());
}

double bracket(double x, const Deformation& deformation) {
  return deformation ? qbracket(x, *deformation) : qbracket_classical(x);
}

double casimir_eigenvalue(Spin j, const Deformation& deformation) {
  if (j.twice() < 0) throw DomainError("negative spin " + j.to_string());
  const double jv = j.value();
  return bracket(jv, deformation) * bracket(jv + 1.0, deformation);
}

}  // namespace qrotor
