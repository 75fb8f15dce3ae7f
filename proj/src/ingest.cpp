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

#include "qrotor/ingest.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <utility>

#include <fmt/format.h>
#include <json.hpp>

#include "qrotor/error.hpp"

namespace qrotor {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Returns the value of "# key: value" if the comment carries that key.
std::optional<std::string_view> header_value(std::string_view comment,
                                             std::string_view key) {
  comment = trim(comment.substr(1));
  if (comment.size() <= key.size() || comment.substr(0, key.size()) != key ||
      comment[key.size()] != ':') {
    return std::nullopt;
  }
  return trim(comment.substr(key.size() + 1));
}

std::optional<double> parse_double(std::string_view s) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

BandFile parse_band_file(std::string_view text, std::filesystem::path path) {
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

  std::optional<std::string> name;
  std::vector<std::string> notes;
  std::vector<Level> levels;
  std::vector<std::size_t> level_lines;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    const auto raw = text.substr(
        pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    const auto line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (auto v = header_value(line, "nucleus")) {
        if (name) throw ParseError("duplicate nucleus header", line_no);
        if (v->empty()) throw ParseError("empty nucleus name", line_no);
        name = std::string(*v);
      } else if (auto note = header_value(line, "note")) {
        notes.emplace_back(*note);
      }
      continue;
    }

    const auto fields = split_ws(line);
    if (fields.size() != 2) {
      throw ParseError("expected '<spin> <energy_keV>'", line_no);
    }
    Spin j;
    try {
      j = Spin::parse(fields[0]);
    } catch (const DomainError&) {
      throw ParseError("invalid spin '" + std::string(fields[0]) + "'",
                       line_no);
    }
    const auto energy = parse_double(fields[1]);
    if (!energy) {
      throw ParseError("non-numeric energy '" + std::string(fields[1]) + "'",
                       line_no);
    }
    levels.push_back({j, *energy});
    level_lines.push_back(line_no);
  }

  if (!name) throw ParseError("missing '# nucleus:' header", 0);
  std::optional<BandData> band;
  try {
    band.emplace(*name, std::move(levels));
  } catch (const BandError& e) {
    const std::size_t line =
        e.level_index() < level_lines.size()
            ? level_lines[e.level_index()]
            : (level_lines.empty() ? 0 : level_lines.back());
    throw ParseError(e.problem(), line, e.detail());
  }
  return BandFile{std::move(path), std::move(*band), std::move(notes)};
}

BandData parse_band(std::string_view text) {
  return parse_band_file(text).band;
}

BandFile read_band_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open band file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_band_file(buf.str(), path);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), 0);
  }
}

std::string write_band(const BandFile& file) {
  std::string out = fmt::format("# nucleus: {}\n", file.band.name());
  for (const auto& note : file.notes) out += fmt::format("# note: {}\n", note);
  for (const Level& lv : file.band.levels()) {
    out += fmt::format("{} {}\n", lv.j.to_string(), lv.energy_keV);
  }
  return out;
}

Report write_report(std::span<const BandReport> results,
                    const ReportOptions& options) {
  if (results.empty()) throw DomainError("no results to report");

  std::string table = fmt::format("{:<14} {:>8} {:>9} {:>14} {:>10} {:>13}\n",
                                  "Nucleus", "tau", "A(keV)", "10^3chi2(MeV2)",
                                  "rms(keV)", "cl.rms(keV)");
  nlohmann::json doc = nlohmann::json::array();

  for (const auto& r : results) {
    const FitResult& primary =
        options.classical_only ? r.fits.classical : r.fits.q;
    const std::string tau =
        primary.qp ? fmt::format("{:.4f}", primary.qp->tau()) : "-";
    table += fmt::format("{:<14} {:>8} {:>9.2f} {:>14.2f} {:>10.2f} {:>13.2f}\n",
                         r.band.name(), tau, primary.A_keV,
                         1e3 * primary.chi2_MeV2, primary.rms_keV,
                         r.fits.classical.rms_keV);

    auto emit = [&](const FitResult& fit) {
      nlohmann::json residuals = nlohmann::json::array();
      for (const auto& res : fit.residuals) {
        residuals.push_back({{"j", res.j.value()},
                             {"exp_keV", res.exp_keV},
                             {"theo_keV", res.theo_keV}});
      }
      nlohmann::json entry = {{"nucleus", r.band.name()},
                              {"variant", to_string(fit.variant)},
                              {"tau", nullptr},
                              {"dim", nullptr},
                              {"A_keV", fit.A_keV},
                              {"chi2_MeV2", fit.chi2_MeV2},
                              {"rms_keV", fit.rms_keV},
                              {"residuals", std::move(residuals)}};
      if (fit.qp) {
        entry["tau"] = fit.qp->tau();
        entry["dim"] = fit.qp->dim();
      }
      doc.push_back(std::move(entry));
    };
    if (!options.classical_only) emit(r.fits.q);
    emit(r.fits.classical);
  }
  return {std::move(table), doc.dump(2) + "\n"};
}

std::string emit_plot_data(const BandData& band, const ModelComparison& fits) {
  std::string out = fmt::format("# nucleus: {}\n", band.name());
  if (fits.q.qp) {
    out += fmt::format("# tau: {:.6f} (dim {})\n", fits.q.qp->tau(),
                       fits.q.qp->dim());
  }
  out += fmt::format("# A_q: {:.4f} keV  A_classical: {:.4f} keV\n",
                     fits.q.A_keV, fits.classical.A_keV);
  out += "# energies in keV relative to the band head\n";
  out += "# j E_exp E_q E_classical residual_q residual_classical\n";
  for (std::size_t i = 0; i < band.size(); ++i) {
    const Residual& q = fits.q.residuals[i];
    const Residual& c = fits.classical.residuals[i];
    out += fmt::format("{} {:.4f} {:.4f} {:.4f} {:.4f} {:.4f}\n",
                       q.j.to_string(), q.exp_keV, q.theo_keV, c.theo_keV,
                       q.diff_keV, c.diff_keV);
  }
  return out;
}

}  // namespace qrotor
