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

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qrotor/fit.hpp"
#include "qrotor/model.hpp"

namespace qrotor {

/// A parsed band file.
///
/// Format (UTF-8, line oriented):
///
///     # nucleus: 162Dy
///     # note: ground band, adopted levels
///     2  80.66
///     4  265.66
///
/// The nucleus header is required; note lines are optional and repeatable;
/// other '#' lines and blank lines are ignored. Data lines hold a decimal
/// spin (integer or .5) and an energy in keV.
struct BandFile {
  std::filesystem::path path;
  BandData band;
  std::vector<std::string> notes;
};

/// Throws ParseError with the offending line number.
BandFile parse_band_file(std::string_view text,
                         std::filesystem::path path = {});
BandData parse_band(std::string_view text);

/// Reads and parses a file. Throws Error when the file cannot be read.
BandFile read_band_file(const std::filesystem::path& path);

/// Canonical text form; parse_band_file(write_band(x)) reproduces x.
std::string write_band(const BandFile& file);

struct BandReport {
  BandData band;
  ModelComparison fits;
};

struct ReportOptions {
  bool classical_only = false;
};

struct Report {
  std::string table;
  std::string json;
};

/// Fixed-width table (Nucleus, tau, A, 10^3 chi2, rms, classical rms) and
/// a JSON document with full residuals. With classical_only the table's A,
/// chi2 and rms columns describe the undeformed rotor and tau reads "-".
/// Throws DomainError on empty input.
Report write_report(std::span<const BandReport> results,
                    const ReportOptions& options = {});

/// Whitespace-separated columns j, E_exp, E_q, E_classical, residual_q,
/// residual_classical (keV, relative to the band head) after a '#' header.
std::string emit_plot_data(const BandData& band, const ModelComparison& fits);

}  // namespace qrotor
