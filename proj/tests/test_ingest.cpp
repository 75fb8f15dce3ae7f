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

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qrotor/error.hpp"
#include "qrotor/ingest.hpp"
#include "synthetic.hpp"

using namespace qrotor;
using Catch::Matchers::ContainsSubstring;

namespace {

Spin S(double j) { return Spin::from_double(j); }

std::size_t error_line(std::string_view text) {
  try {
    parse_band(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace

TEST_CASE("minimal band file") {
  const BandFile f = parse_band_file(
      "# nucleus: 170Hf\n"
      "# note: test levels\n"
      "2 100.0\n4 320.5\n6 650\n");
  CHECK(f.band.name() == "170Hf");
  CHECK(f.band.step() == S(2));
  CHECK(f.band.size() == 3);
  CHECK(f.band.levels()[1].energy_keV == 320.5);
  REQUIRE(f.notes.size() == 1);
  CHECK(f.notes[0] == "test levels");
}

TEST_CASE("comments, blank lines and CRLF are tolerated") {
  const BandData band = parse_band(
      "\xEF\xBB\xBF# comment before header\r\n"
      "\r\n"
      "#nucleus:   130La  \r\n"
      "  7.5\t 0.0  \r\n"
      "# interleaved comment\n"
      "9.5 300.0\n"
      "11.5 650.0");
  CHECK(band.name() == "130La");
  CHECK(band.step() == S(2));
  CHECK(band.levels()[0].j.twice() == 15);
  CHECK(band.levels()[1].j.twice() == 19);
  CHECK(band.levels()[2].j.twice() == 23);
}

TEST_CASE("line-numbered diagnostics") {
  const std::string head = "# nucleus: X\n";
  CHECK(error_line(head + "2 1\n4 2\n8 3\n") == 4);
  try {
    parse_band(head + "2 1\n4 2\n8 3\n");
  } catch (const ParseError& e) {
    CHECK_THAT(e.what(), ContainsSubstring("inconsistent spin step at line 4"));
  }
  CHECK(error_line(head + "2 1\n4 abc\n6 3\n") == 3);
  CHECK(error_line(head + "2 1\n2 2\n4 3\n") == 3);
  CHECK(error_line(head + "4 1\n2 2\n0 3\n") == 3);
  CHECK(error_line(head + "2 1\n4 0.5\n6 3\n") == 3);
  CHECK(error_line(head + "2 1\n\n4 2\n") == 4);
  CHECK(error_line(head + "2.25 1\n4 2\n6 3\n") == 2);
  CHECK(error_line(head + "2 1 7\n4 2\n6 3\n") == 2);
  CHECK(error_line("2 1\n4 2\n6 3\n") == 0);
  CHECK(error_line(head + head + "2 1\n4 2\n6 3\n") == 2);
  CHECK_THROWS_WITH(parse_band("2 1\n4 2\n6 3\n"),
                    ContainsSubstring("missing '# nucleus:' header"));
}

TEST_CASE("canonical form is stable") {
  const std::string messy =
      "# nucleus: 174Yb\n# something else\n2   76.47\n\n4 253.12\n6 526.0\n"
      "# note: trailing note\n8 889.9\n";
  const BandFile once = parse_band_file(messy);
  const std::string canonical = write_band(once);
  CHECK(canonical ==
        "# nucleus: 174Yb\n# note: trailing note\n2 76.47\n4 253.12\n6 526\n8 889.9\n");
  CHECK(write_band(parse_band_file(canonical)) == canonical);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const auto sb = qrotor::testing::random_band(rng);
    const BandFile f{{}, sb.band, {"random"}};
    const std::string text = write_band(f);
    const BandFile back = parse_band_file(text);
    REQUIRE(back.band.size() == sb.band.size());
    for (std::size_t k = 0; k < back.band.size(); ++k) {
      CHECK(back.band.levels()[k].j == sb.band.levels()[k].j);
      CHECK(back.band.levels()[k].energy_keV == sb.band.levels()[k].energy_keV);
    }
    CHECK(write_band(back) == text);
  }
}

TEST_CASE("read_band_file") {
  CHECK_THROWS_AS(read_band_file("/nonexistent/missing.band"), Error);
  const BandFile dy = read_band_file(QROTOR_DATA_DIR "/dy162.band");
  CHECK(dy.band.name() == "162Dy");
  CHECK(dy.band.j_min() == S(2));
  CHECK(dy.band.j_max() == S(18));
  CHECK(dy.notes.size() == 4);
}

TEST_CASE("report table and JSON") {
  const BandData band = qrotor::testing::exact_q_band("exact", S(2), S(2), 9, 12.81);
  const std::vector<BandReport> results = {{band, compare(band)}};
  const Report report = write_report(results);

  // Header plus one row.
  CHECK(std::count(report.table.begin(), report.table.end(), '\n') == 2);
  CHECK_THAT(report.table, ContainsSubstring("0.0332"));
  CHECK_THAT(report.table, ContainsSubstring("12.81"));
  CHECK_THAT(report.table, ContainsSubstring(" 0.00 "));
  CHECK(write_report(results).table == report.table);
  CHECK(write_report(results).json == report.json);

  const auto doc = nlohmann::json::parse(report.json);
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 2);
  CHECK(doc[0]["nucleus"] == "exact");
  CHECK(doc[0]["variant"] == "q_deformed");
  CHECK(doc[0]["dim"] == 189);
  CHECK(doc[0]["tau"].get<double>() == QParameter(189).tau());
  CHECK(doc[0]["A_keV"].get<double>() == results[0].fits.q.A_keV);
  CHECK(doc[0]["chi2_MeV2"].get<double>() == results[0].fits.q.chi2_MeV2);
  CHECK(doc[0]["rms_keV"].is_number());
  CHECK(doc[0]["residuals"].size() == 9);
  CHECK(doc[0]["residuals"][1]["j"] == 4);
  CHECK(doc[0]["residuals"][1].contains("exp_keV"));
  CHECK(doc[0]["residuals"][1].contains("theo_keV"));
  CHECK(doc[1]["variant"] == "classical");
  CHECK(doc[1]["tau"].is_null());
  CHECK(doc[1]["dim"].is_null());

  const Report classical = write_report(results, {.classical_only = true});
  CHECK(nlohmann::json::parse(classical.json).size() == 1);
  CHECK_THAT(classical.table, ContainsSubstring("       -"));

  CHECK_THROWS_AS(write_report(std::span<const BandReport>{}), DomainError);
}

TEST_CASE("plot data columns") {
  const BandData band = qrotor::testing::exact_q_band("exact", S(2), S(2), 9, 12.81);
  const std::string plot = emit_plot_data(band, compare(band));
  std::size_t rows = 0;
  std::size_t pos = 0;
  while (pos < plot.size()) {
    const auto eol = plot.find('\n', pos);
    const std::string line = plot.substr(pos, eol - pos);
    pos = eol + 1;
    if (line.empty() || line[0] == '#') continue;
    ++rows;
    std::istringstream in(line);
    std::vector<std::string> cols;
    for (std::string c; in >> c;) cols.push_back(c);
    REQUIRE(cols.size() == 6);
    CHECK(std::fabs(std::stod(cols[4])) < 1e-3);  // residual_q
  }
  CHECK(rows == band.size());
  CHECK(plot.rfind("# nucleus: exact", 0) == 0);
}
