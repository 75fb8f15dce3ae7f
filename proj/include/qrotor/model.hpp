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

#include <span>
#include <string>
#include <vector>

#include "qrotor/qnum.hpp"
#include "qrotor/spin.hpp"

namespace qrotor {

struct Level {
  Spin j;
  double energy_keV = 0.0;
};

/// A named rotational band: levels with spins in a fixed step.
///
/// Invariants, checked on construction (BandError names the level):
/// at least 3 levels, spins strictly increasing in a constant step,
/// energies strictly increasing, lowest energy >= 0.
class BandData {
 public:
  BandData(std::string name, std::vector<Level> levels);

  const std::string& name() const { return name_; }
  std::span<const Level> levels() const { return levels_; }
  std::size_t size() const { return levels_.size(); }
  Spin step() const { return step_; }
  Spin j_min() const { return levels_.front().j; }
  Spin j_max() const { return levels_.back().j; }

 private:
  std::string name_;
  std::vector<Level> levels_;
  Spin step_;
};

/// Dimension of the embedding space for a band with spins
/// j_min, j_min+step, ..., j_max: the sum of 2j+1 over those spins, bumped
/// to the next odd number when even. Throws DomainError on a malformed
/// range.
int space_size(Spin j_min, Spin j_max, Spin step);

/// Deformation fixed by the band's spin content. Throws DomainError when
/// the resulting dimension is below 5.
QParameter q_parameter_from_band(const BandData& band);

/// A [j][j+1] in keV. Throws DomainError for A <= 0 and RegimeError when
/// tau (j+1) >= pi.
double energy(Spin j, double A_keV, const Deformation& deformation);

/// Energies of the band's spins relative to the band head j_min.
std::vector<Level> band_energies(const BandData& band, double A_keV,
                                 const Deformation& deformation);

}  // namespace qrotor
