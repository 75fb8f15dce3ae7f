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

#include "qrotor/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "qrotor/bp_space.hpp"
#include "qrotor/error.hpp"
#include "qrotor/fit.hpp"
#include "qrotor/ingest.hpp"
#include "qrotor/suq2.hpp"

namespace qrotor::cli {

namespace fs = std::filesystem;

namespace {

struct Outcome {
  std::optional<BandReport> report;
  std::string error;
};

// Directories expand to their *.band files in name order.
std::vector<fs::path> expand_inputs(const std::vector<std::string>& inputs) {
  std::vector<fs::path> out;
  for (const auto& in : inputs) {
    const fs::path p(in);
    std::error_code ec;
    if (fs::is_directory(p, ec)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::directory_iterator(p)) {
        if (entry.is_regular_file() && entry.path().extension() == ".band") {
          found.push_back(entry.path());
        }
      }
      std::sort(found.begin(), found.end());
      out.insert(out.end(), found.begin(), found.end());
    } else {
      out.push_back(p);
    }
  }
  return out;
}

Outcome load_and_fit(const fs::path& path) {
  try {
    BandFile file = read_band_file(path);
    ModelComparison fits = compare(file.band);
    return {BandReport{std::move(file.band), std::move(fits)}, {}};
  } catch (const std::exception& e) {
    return {std::nullopt, e.what()};
  }
}

// Fits every input concurrently; results keep input order.
int fit_all(const CliConfig& config, std::ostream& err,
            std::vector<BandReport>& reports) {
  const auto paths = expand_inputs(config.inputs);
  if (paths.empty()) {
    err << "error: no band files found\n";
    return kExitFailure;
  }
  std::vector<Outcome> outcomes(paths.size());
  {
    std::vector<std::jthread> workers;
    workers.reserve(paths.size());
    for (std::size_t i = 0; i < paths.size(); ++i) {
      workers.emplace_back([&, i] { outcomes[i] = load_and_fit(paths[i]); });
    }
  }
  int status = kExitOk;
  for (auto& outcome : outcomes) {
    if (outcome.report) {
      reports.push_back(std::move(*outcome.report));
    } else {
      err << "error: " << outcome.error << '\n';
      status = kExitFailure;
    }
  }
  return status;
}

int emit(const CliConfig& config, const std::string& text, std::ostream& out,
         std::ostream& err) {
  if (!config.output) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(*config.output, std::ios::binary);
  file << text;
  if (!file) {
    err << "error: cannot write '" << *config.output << "'\n";
    return kExitFailure;
  }
  return kExitOk;
}

std::string residual_listing(const BandReport& r, bool classical_only) {
  const FitResult& fit = classical_only ? r.fits.classical : r.fits.q;
  std::string out = fmt::format("\n{}  variant {}", r.band.name(),
                                to_string(fit.variant));
  if (fit.qp) {
    out += fmt::format("  tau {:.6f}  dim {}", fit.qp->tau(), fit.qp->dim());
  }
  out += fmt::format("  A {:.4f} keV\n", fit.A_keV);
  out += fmt::format("{:>6} {:>12} {:>12} {:>10}\n", "j", "exp(keV)",
                     "theo(keV)", "diff(keV)");
  for (const auto& res : fit.residuals) {
    out += fmt::format("{:>6} {:>12.3f} {:>12.3f} {:>10.3f}\n",
                       res.j.to_string(), res.exp_keV, res.theo_keV,
                       res.diff_keV);
  }
  return out;
}

}  // namespace

void validate(const CliConfig& config) {
  if (config.max_dim < 3 || config.max_dim % 2 == 0) {
    throw UsageError("--max-dim must be odd and >= 3, got " +
                     std::to_string(config.max_dim));
  }
  if (config.tolerance && !(*config.tolerance > 0.0)) {
    throw UsageError("--tolerance must be positive");
  }
  if (config.subcommand != Subcommand::verify && config.inputs.empty()) {
    throw UsageError("at least one input path is required");
  }
}

int cmd_fit(const CliConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<BandReport> reports;
  int status = fit_all(config, err, reports);
  if (reports.empty()) return kExitFailure;
  const Report report =
      write_report(reports, {.classical_only = config.classical_only});
  std::string text;
  if (config.json) {
    text = report.json;
  } else {
    text = report.table;
    for (const auto& r : reports) {
      text += residual_listing(r, config.classical_only);
    }
  }
  const int written = emit(config, text, out, err);
  return status != kExitOk ? status : written;
}

int cmd_table(const CliConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<BandReport> reports;
  int status = fit_all(config, err, reports);
  if (reports.empty()) return kExitFailure;
  const Report report =
      write_report(reports, {.classical_only = config.classical_only});
  const int written =
      emit(config, config.json ? report.json : report.table, out, err);
  return status != kExitOk ? status : written;
}

int cmd_plotdata(const CliConfig& config, std::ostream& out,
                 std::ostream& err) {
  std::vector<BandReport> reports;
  int status = fit_all(config, err, reports);
  if (reports.empty()) return kExitFailure;
  std::string text;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i > 0) text += "\n\n";
    text += emit_plot_data(reports[i].band, reports[i].fits);
  }
  const int written = emit(config, text, out, err);
  return status != kExitOk ? status : written;
}

int cmd_verify(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const double tol =
      config.tolerance.value_or(config.max_dim > 201 ? 1e-10 : 1e-11);
  const int l_cap = (config.max_dim - 1) / 2;

  std::set<int> ls;
  for (int l : {1, 2, 5, 25, l_cap}) {
    if (l <= l_cap) ls.insert(l);
  }
  const Spin js[] = {Spin::from_twice(1), Spin::integer(1), Spin::integer(2),
                     Spin::integer(5), Spin::integer(10)};
  const Deformation deformations[] = {QParameter(189), QParameter(1001),
                                      std::nullopt};

  std::ostringstream report;
  int failures = 0;
  const auto record = [&](const std::string& identity, const std::string& where,
                          const std::function<double()>& check) {
    double dev = 0.0;
    bool ok = false;
    try {
      dev = check();
      ok = dev <= tol;
      report << fmt::format("{:<14} {:<24} {:>10.3e}  {}\n", identity, where,
                            dev, ok ? "ok" : "FAIL");
    } catch (const Error& e) {
      report << fmt::format("{:<14} {:<24} {:>10}  FAIL ({})\n", identity,
                            where, "-", e.what());
    }
    if (!ok) {
      ++failures;
      err << fmt::format("identity {} failed at {}: deviation {:.3e} > {:.1e}\n",
                         identity, where, dev, tol);
    }
  };

  report << fmt::format("# tolerance {:.1e}, max dim {}\n", tol,
                        config.max_dim);
  for (int l : ls) {
    for (double theta0 : {0.0, std::numbers::pi / 3.0}) {
      const BPSpace space =
          build_space(Spin::integer(l), theta0, config.max_dim);
      const std::string where = fmt::format("l={} theta0={:.4f}", l, theta0);
      record("quantum_plane", where, [&] { return check_quantum_plane(space); });
      record("cyclic_shift", where, [&] { return check_cyclic_shift(space); });
    }
  }
  for (const Spin j : js) {
    for (const Deformation& d : deformations) {
      const std::string where =
          fmt::format("j={} dim={}", j.to_string(),
                      d ? std::to_string(d->dim()) : std::string("classical"));
      record("commutators", where,
             [&] { return check_commutators(build_irrep(j, d)); });
      record("casimir", where,
             [&] { return check_casimir(build_irrep(j, d)); });
    }
  }
  report << fmt::format("# {} failed\n", failures);

  const int written = emit(config, report.str(), out, err);
  return failures > 0 ? kExitFailure : written;
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"q-deformed rotor fits and algebra verification", "qrotor"};
  app.require_subcommand(1);

  CliConfig config;
  const auto add_common = [&](CLI::App* sub, bool needs_inputs) {
    if (needs_inputs) {
      sub->add_option("inputs", config.inputs, "Band files or directories");
    }
    sub->add_option("-o,--output", config.output, "Write output to a file");
  };
  const auto add_fit_flags = [&](CLI::App* sub) {
    sub->add_flag("--classical-only", config.classical_only,
                  "Report the undeformed rotor only");
    sub->add_flag("--json", config.json, "Emit the JSON report");
  };

  CLI::App* fit = app.add_subcommand("fit", "Fit A for each band and report");
  add_common(fit, true);
  add_fit_flags(fit);
  CLI::App* table = app.add_subcommand("table", "Write the summary table");
  add_common(table, true);
  add_fit_flags(table);
  CLI::App* plot = app.add_subcommand("plotdata", "Emit plot-ready columns");
  add_common(plot, true);
  CLI::App* verify =
      app.add_subcommand("verify", "Check the operator algebra numerically");
  add_common(verify, false);
  verify->add_option("--max-dim", config.max_dim,
                     "Largest space dimension in the sweep (odd)");
  verify->add_option("--tolerance", config.tolerance,
                     "Override the max-norm tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (fit->parsed()) config.subcommand = Subcommand::fit;
  if (table->parsed()) config.subcommand = Subcommand::table;
  if (plot->parsed()) config.subcommand = Subcommand::plotdata;
  if (verify->parsed()) config.subcommand = Subcommand::verify;

  try {
    validate(config);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    switch (config.subcommand) {
      case Subcommand::fit:
        return cmd_fit(config, out, err);
      case Subcommand::table:
        return cmd_table(config, out, err);
      case Subcommand::plotdata:
        return cmd_plotdata(config, out, err);
      case Subcommand::verify:
        return cmd_verify(config, out, err);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitFailure;
}

}  // namespace qrotor::cli
