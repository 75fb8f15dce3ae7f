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

#include "qrotor/fit.hpp"

#include <cmath>
#include <cstddef>
#include <limits>

#include "qrotor/error.hpp"

namespace qrotor {

namespace {

constexpr double kKeVPerMeV = 1000.0;

// Model shape f_j with unit A, referenced to the band head.
std::vector<double> shape(const BandData& band, const Deformation& d) {
  std::vector<double> f;
  f.reserve(band.size());
  for (const Level& lv : band_energies(band, 1.0, d)) f.push_back(lv.energy_keV);
  return f;
}

std::vector<double> referenced_energies(const BandData& band) {
  const double head = band.levels().front().energy_keV;
  std::vector<double> e;
  e.reserve(band.size());
  for (const Level& lv : band.levels()) e.push_back(lv.energy_keV - head);
  return e;
}

double sum_squares(const std::vector<double>& e, const std::vector<double>& f,
                   double A) {
  double s = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    const double r = (e[i] - A * f[i]) / kKeVPerMeV;
    s += r * r;
  }
  return s;
}

FitResult make_result(const BandData& band, const Deformation& d, double A,
                      const std::vector<double>& e,
                      const std::vector<double>& f) {
  FitResult result;
  result.variant = d ? Variant::q_deformed : Variant::classical;
  result.A_keV = A;
  result.qp = d;
  result.residuals.reserve(band.size());
  double chi2 = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    const double theo = A * f[i];
    const double diff = e[i] - theo;
    result.residuals.push_back({band.levels()[i].j, e[i], theo, diff});
    chi2 += (diff / kKeVPerMeV) * (diff / kKeVPerMeV);
  }
  result.chi2_MeV2 = chi2;
  result.rms_keV =
      std::sqrt(chi2 / static_cast<double>(band.size())) * kKeVPerMeV;
  return result;
}

}  // namespace

const char* to_string(Variant variant) {
  switch (variant) {
    case Variant::q_deformed:
      return "q_deformed";
    case Variant::classical:
      return "classical";
  }
  return "unknown";
}

double chi2_at(const BandData& band, const Deformation& deformation,
               double A_keV) {
  return sum_squares(referenced_energies(band), shape(band, deformation),
                     A_keV);
}

FitResult fit_A(const BandData& band, const Deformation& deformation) {
  const auto f = shape(band, deformation);
  const auto e = referenced_energies(band);
  double ef = 0.0;
  double ff = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    ef += e[i] * f[i];
    ff += f[i] * f[i];
  }
  if (ff == 0.0) {
    throw DomainError("band '" + band.name() + "' has a degenerate model shape");
  }
  const double A = ef / ff;
  if (!(A > 0.0)) {
    throw DomainError("band '" + band.name() +
                      "' gives a non-positive fitted A = " + std::to_string(A));
  }
  return make_result(band, deformation, A, e, f);
}

FitResult fit_A_oracle(const BandData& band, const Deformation& deformation,
                       const OracleGrid& grid) {
  if (!(grid.A_lo < grid.A_hi) || grid.n < 1000) {
    throw DomainError("oracle grid needs A_lo < A_hi and n >= 1000");
  }
  const auto f = shape(band, deformation);
  const auto e = referenced_energies(band);
  const double h = (grid.A_hi - grid.A_lo) / grid.n;
  const auto at = [&](int k) { return grid.A_lo + h * k; };

  int best = 0;
  double best_chi2 = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= grid.n; ++k) {
    const double c = sum_squares(e, f, at(k));
    if (c < best_chi2) {
      best_chi2 = c;
      best = k;
    }
  }
  if (best == 0 || best == grid.n) {
    throw DomainError("chi2 minimum lies on the oracle grid boundary");
  }

  // Golden-section search on [A_{best-1}, A_{best+1}].
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = at(best - 1);
  double b = at(best + 1);
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = sum_squares(e, f, c);
  double fd = sum_squares(e, f, d);
  for (int it = 0; it < 200 && (b - a) > 1e-14 * std::fabs(b); ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = sum_squares(e, f, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = sum_squares(e, f, d);
    }
  }
  return make_result(band, deformation, 0.5 * (a + b), e, f);
}

ModelComparison compare(const BandData& band) {
  return {fit_A(band, q_parameter_from_band(band)), fit_A(band, std::nullopt)};
}

}  // namespace qrotor
