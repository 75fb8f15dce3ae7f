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

#include "qrotor/model.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "qrotor/error.hpp"

namespace qrotor {

BandData::BandData(std::string name, std::vector<Level> levels)
    : name_(std::move(name)), levels_(std::move(levels)) {
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const Level& lv = levels_[i];
    if (lv.j.twice() < 0) {
      throw BandError("negative spin", i, lv.j.to_string());
    }
    if (!std::isfinite(lv.energy_keV)) {
      throw BandError("non-finite energy", i);
    }
    if (i == 0) {
      if (lv.energy_keV < 0.0) {
        throw BandError("band head energy must be >= 0", i);
      }
      continue;
    }
    const Level& prev = levels_[i - 1];
    if (lv.j == prev.j) {
      throw BandError("duplicate spin", i, lv.j.to_string());
    }
    if (lv.j < prev.j) {
      throw BandError("spins not increasing", i,
                      lv.j.to_string() + " after " + prev.j.to_string());
    }
    const Spin step = lv.j - prev.j;
    if (i == 1) {
      step_ = step;
    } else if (step != step_) {
      throw BandError("inconsistent spin step", i,
                      "expected " + step_.to_string() + ", got " +
                          step.to_string());
    }
    if (!(lv.energy_keV > prev.energy_keV)) {
      throw BandError("energies not increasing with spin", i);
    }
  }
  if (levels_.size() < 3) {
    throw BandError("a band needs at least 3 levels", levels_.size(),
                    "got " + std::to_string(levels_.size()));
  }
}

int space_size(Spin j_min, Spin j_max, Spin step) {
  if (j_min.twice() < 0) throw DomainError("negative j_min");
  if (step.twice() <= 0) throw DomainError("spin step must be positive");
  if (j_max < j_min) throw DomainError("empty spin range: j_max < j_min");
  if ((j_max - j_min).twice() % step.twice() != 0) {
    throw DomainError("spin range " + j_min.to_string() + ".." +
                      j_max.to_string() + " is not a multiple of step " +
                      step.to_string());
  }
  long sum = 0;
  for (Spin j = j_min; j <= j_max; j = j + step) sum += j.multiplicity();
  if (sum % 2 == 0) ++sum;
  return static_cast<int>(sum);
}

QParameter q_parameter_from_band(const BandData& band) {
  const int dim = space_size(band.j_min(), band.j_max(), band.step());
  if (dim < 5) {
    throw DomainError("band '" + band.name() + "' gives space dimension " +
                      std::to_string(dim) + " < 5");
  }
  return QParameter(dim);
}

double energy(Spin j, double A_keV, const Deformation& deformation) {
  if (!(A_keV > 0.0)) throw DomainError("A must be positive");
  if (deformation &&
      !(deformation->tau() * (j.value() + 1.0) < std::numbers::pi)) {
    throw RegimeError("tau (j+1) >= pi for j = " + j.to_string() +
                      ", dim = " + std::to_string(deformation->dim()));
  }
  return A_keV * casimir_eigenvalue(j, deformation);
}

std::vector<Level> band_energies(const BandData& band, double A_keV,
                                 const Deformation& deformation) {
  const double head = energy(band.j_min(), A_keV, deformation);
  std::vector<Level> out;
  out.reserve(band.size());
  for (const Level& lv : band.levels()) {
    out.push_back({lv.j, energy(lv.j, A_keV, deformation) - head});
  }
  return out;
}

}  // namespace qrotor
