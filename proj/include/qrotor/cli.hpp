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

#include <optional>
#include <stdexcept>
#include <ostream>
#include <string>
#include <vector>

namespace qrotor::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

enum class Subcommand { fit, verify, table, plotdata };

struct CliConfig {
  Subcommand subcommand = Subcommand::fit;
  std::vector<std::string> inputs;
  int max_dim = 201;
  std::optional<double> tolerance;
  std::optional<std::string> output;
  bool classical_only = false;
  bool json = false;
};

/// Throws UsageError when the configuration is inconsistent.
void validate(const CliConfig& config);

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int cmd_fit(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_table(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_plotdata(const CliConfig& config, std::ostream& out,
                 std::ostream& err);

/// Parses argv and dispatches. Exit codes: 0 success, 1 validation or
/// regime failure, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace qrotor::cli
