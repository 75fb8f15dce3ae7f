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

#include <vector>

#include "qrotor/model.hpp"
#include "qrotor/qnum.hpp"

namespace qrotor {

enum class Variant { q_deformed, classical };

const char* to_string(Variant variant);

/// One fitted level. Energies are relative to the band head, in keV.
struct Residual {
  Spin j;
  double exp_keV = 0.0;
  double theo_keV = 0.0;
  double diff_keV = 0.0;  // exp - theo
};

/// Least-squares fit of A = 1/2I for one model variant.
///
/// chi2 is the unweighted sum of squared residuals in MeV^2; rms is
/// sqrt(chi2 / N) over the N levels of the band, in keV.
struct FitResult {
  Variant variant = Variant::classical;
  double A_keV = 0.0;
  double chi2_MeV2 = 0.0;
  double rms_keV = 0.0;
  std::vector<Residual> residuals;
  Deformation qp;
};

struct ModelComparison {
  FitResult q;
  FitResult classical;
};

/// chi2 (MeV^2) of the band against A [j][j+1], both sides referenced to
/// the band head.
double chi2_at(const BandData& band, const Deformation& deformation,
               double A_keV);

/// Closed-form minimizer of chi2 over A:
/// A* = sum e_j f_j / sum f_j^2 with f_j = [j][j+1] - [j_min][j_min+1].
/// Throws DomainError when sum f_j^2 = 0 or A* <= 0.
FitResult fit_A(const BandData& band, const Deformation& deformation);

struct OracleGrid {
  double A_lo = 0.0;
  double A_hi = 0.0;
  int n = 0;  // number of intervals
};

/// Brute-force minimizer: exhaustive scan over n+1 equally spaced A values,
/// then golden-section refinement between the neighbours of the best grid
/// point. Throws DomainError for an invalid grid or when the best grid
/// point is on the boundary.
FitResult fit_A_oracle(const BandData& band, const Deformation& deformation,
                       const OracleGrid& grid);

/// Fits the q-rotor (tau from the band's spins) and the undeformed rotor.
ModelComparison compare(const BandData& band);

}  // namespace qrotor
