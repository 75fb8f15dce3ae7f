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

#include "qrotor/spin.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include "qrotor/error.hpp"

namespace qrotor {

Spin Spin::from_double(double value) {
  const double twice = 2.0 * value;
  if (!std::isfinite(twice) || std::nearbyint(twice) != twice ||
      std::fabs(twice) > std::numeric_limits<int>::max() / 2) {
    throw DomainError("not a half-integer spin: " + std::to_string(value));
  }
  return Spin(static_cast<int>(twice));
}

Spin Spin::parse(std::string_view text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw DomainError("invalid spin '" + std::string(text) + "'");
  }
  return from_double(value);
}

std::string Spin::to_string() const {
  std::string out = std::to_string(twice_ / 2);
  if (!is_integer()) {
    if (twice_ < 0 && twice_ / 2 == 0) out = "-0";
    out += ".5";
  }
  return out;
}

}  // namespace qrotor
