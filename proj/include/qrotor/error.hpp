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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qrotor {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument outside the mathematical domain of an operation
/// (even dimension, non-half-integer spin, A <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The l >> j operating regime is violated: some q-bracket entering a
/// matrix element or energy has left the interval where it is positive.
class RegimeError : public Error {
 public:
  using Error::Error;
};

/// A band violates one of its structural invariants. `level_index` names
/// the offending level (position in the supplied list); `detail` carries the
/// values involved.
class BandError : public Error {
 public:
  BandError(const std::string& problem, std::size_t level_index,
            const std::string& detail = {})
      : Error(detail.empty() ? problem : problem + " (" + detail + ")"),
        problem_(problem),
        detail_(detail),
        level_index_(level_index) {}
  const std::string& problem() const noexcept { return problem_; }
  const std::string& detail() const noexcept { return detail_; }
  std::size_t level_index() const noexcept { return level_index_; }

 private:
  std::string problem_;
  std::string detail_;
  std::size_t level_index_;
};

/// Malformed band file; `line` is 1-based, 0 when the problem is not
/// attached to a particular line. Formats as "<problem> at line N: <detail>".
class ParseError : public Error {
 public:
  ParseError(const std::string& problem, std::size_t line,
             const std::string& detail = {})
      : Error((line > 0 ? problem + " at line " + std::to_string(line)
                        : problem) +
              (detail.empty() ? "" : ": " + detail)),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace qrotor
