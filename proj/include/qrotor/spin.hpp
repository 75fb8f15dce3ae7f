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

#include <compare>
#include <string>
#include <string_view>

namespace qrotor {

/// Half-integer quantity (spin j, projection m, l) stored as twice its
/// value so that arithmetic on half-integers stays exact.
class Spin {
 public:
  constexpr Spin() = default;

  static constexpr Spin from_twice(int twice) { return Spin(twice); }
  static constexpr Spin integer(int value) { return Spin(2 * value); }
  /// Throws DomainError unless 2*value is an integer.
  static Spin from_double(double value);
  /// Decimal text: "4", "7.5", "2.0". Fractions like "1/2" are rejected.
  static Spin parse(std::string_view text);

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  /// 2j+1 for j = *this.
  constexpr int multiplicity() const { return twice_ + 1; }

  /// "2", "7.5", "-0.5".
  std::string to_string() const;

  constexpr Spin operator+(Spin other) const {
    return Spin(twice_ + other.twice_);
  }
  constexpr Spin operator-(Spin other) const {
    return Spin(twice_ - other.twice_);
  }
  constexpr Spin operator-() const { return Spin(-twice_); }
  constexpr auto operator<=>(const Spin&) const = default;

 private:
  constexpr explicit Spin(int twice) : twice_(twice) {}
  int twice_ = 0;
};

}  // namespace qrotor
