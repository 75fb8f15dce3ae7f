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
#include <optional>

#include "qrotor/spin.hpp"

namespace qrotor {

/// Deformation of a q-rotor with q = exp(i tau) a pure phase.
///
/// The parameter is fixed by the size of the embedding space: tau = 2 pi / D
/// with D = 2l + 1 odd. theta0 is the reference angle of the angle-state grid;
/// energies do not depend on it.
class QParameter {
 public:
  /// Throws DomainError unless dim is odd and >= 3.
  explicit QParameter(int dim, double theta0 = 0.0);

  int dim() const { return dim_; }
  double tau() const { return tau_; }
  double theta0() const { return theta0_; }
  /// l such that dim = 2l + 1.
  Spin l() const { return Spin::integer((dim_ - 1) / 2); }
  /// exp(i tau).
  std::complex<double> q() const { return std::polar(1.0, tau_); }

  bool operator==(const QParameter&) const = default;

 private:
  int dim_;
  double tau_;
  double theta0_;
};

/// A q-deformed rotor, or the undeformed rotor (tau -> 0) when empty.
using Deformation = std::optional<QParameter>;

/// sin(tau x) / sin(tau). Valid for any tau with sin(tau) != 0 and
/// even in tau.
double sine_bracket(double x, double tau);

/// The q-number [x] = sin(tau x) / sin(tau).
double qbracket(double x, const QParameter& qp);

/// Limit of [x] as tau -> 0, i.e. x itself.
constexpr double qbracket_classical(double x) { return x; }

/// [x] for a q-rotor, x for the undeformed rotor.
double bracket(double x, const Deformation& deformation);

/// Casimir eigenvalue [j][j+1] (j(j+1) when undeformed).
double casimir_eigenvalue(Spin j, const Deformation& deformation);

}  // namespace qrotor
