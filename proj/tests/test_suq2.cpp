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

#include <cmath>
#include <vector>

#include "qrotor/bp_space.hpp"
#include "qrotor/error.hpp"
#include "qrotor/suq2.hpp"

using namespace qrotor;
using Catch::Matchers::WithinRel;

namespace {

// 30-digit mpmath values.
constexpr double kSqrtBracket1x2At189 = 1.41382280143777254950;
constexpr double kBracket52x72At231 = 8.73221080940101466255;

struct DirectSum {
  Eigen::MatrixXd jplus;
  Eigen::MatrixXd jminus;
  std::vector<int> offsets;
};

// Test scaffolding: block-diagonal sum of several irreps.
DirectSum direct_sum(const std::vector<IrrepMatrices>& irreps) {
  int n = 0;
  DirectSum sum;
  for (const auto& ir : irreps) {
    sum.offsets.push_back(n);
    n += ir.dim();
  }
  sum.jplus = Eigen::MatrixXd::Zero(n, n);
  sum.jminus = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    const int o = sum.offsets[i];
    const int d = irreps[i].dim();
    sum.jplus.block(o, o, d, d) = irreps[i].jplus;
    sum.jminus.block(o, o, d, d) = irreps[i].jminus;
  }
  return sum;
}

}  // namespace

TEST_CASE("spin one half") {
  const IrrepMatrices ir = build_irrep(Spin::from_twice(1), QParameter(189));
  REQUIRE(ir.dim() == 2);
  CHECK(ir.jplus(1, 0) == 1.0);
  CHECK(ir.jplus(0, 1) == 0.0);
  CHECK(ir.jz(0, 0) == -0.5);
  CHECK(check_commutators(ir) <= 1e-12);
}

TEST_CASE("spin one matrix elements") {
  const IrrepMatrices ir = build_irrep(Spin::integer(1), QParameter(189));
  // <1,1|J+|1,0> = sqrt([1][2])
  CHECK_THAT(ir.jplus(2, 1), WithinRel(kSqrtBracket1x2At189, 1e-14));
  CHECK_THAT(ir.jplus(1, 0), WithinRel(kSqrtBracket1x2At189, 1e-14));
  CHECK(ir.jminus == ir.jplus.transpose());

  const IrrepMatrices cl = build_irrep(Spin::integer(1), std::nullopt);
  CHECK_THAT(cl.jplus(2, 1), WithinRel(std::sqrt(2.0), 1e-15));
  CHECK_THAT(cl.jplus(1, 0), WithinRel(std::sqrt(2.0), 1e-15));
}

TEST_CASE("jplus only connects m to m + 1") {
  const IrrepMatrices ir = build_irrep(Spin::integer(6), QParameter(231));
  for (int r = 0; r < ir.dim(); ++r) {
    for (int c = 0; c < ir.dim(); ++c) {
      if (r != c + 1) CHECK(ir.jplus(r, c) == 0.0);
    }
  }
}

TEST_CASE("build_irrep rejects irreps too large for the space") {
  // tau (2j+1) > pi makes some [j+m+1] negative.
  CHECK_THROWS_AS(build_irrep(Spin::integer(4), QParameter(7)), RegimeError);
  CHECK_THROWS_AS(build_irrep(Spin::integer(-1), QParameter(7)), DomainError);
  CHECK_NOTHROW(build_irrep(Spin::integer(1), QParameter(7)));
}

TEST_CASE("deformed commutation relations") {
  CHECK(check_commutators(build_irrep(Spin::from_twice(1), QParameter(189))) <= 1e-12);
  CHECK(check_commutators(build_irrep(Spin::integer(2), QParameter(189))) <= 1e-12);
  CHECK(check_commutators(build_irrep(Spin::integer(10), QParameter(1001))) <= 1e-11);
  for (int twice = 0; twice <= 60; ++twice) {
    for (int dim : {189, 1001}) {
      const auto ir = build_irrep(Spin::from_twice(twice), QParameter(dim));
      CHECK(check_commutators(ir) <= 1e-12);
    }
  }
}

TEST_CASE("Casimir spectrum") {
  const IrrepMatrices j0 = build_irrep(Spin::integer(0), QParameter(189));
  CHECK(casimir_matrix(j0).size() == 1);
  CHECK(casimir_matrix(j0)(0, 0) == 0.0);

  const IrrepMatrices j1 = build_irrep(Spin::integer(1), QParameter(189));
  CHECK(check_casimir(j1) <= 1e-12);

  const IrrepMatrices j52 = build_irrep(Spin::from_twice(5), QParameter(231));
  const Eigen::MatrixXd c2 = casimir_matrix(j52);
  REQUIRE(c2.rows() == 6);
  for (int k = 0; k < 6; ++k) {
    CHECK_THAT(c2(k, k), WithinRel(kBracket52x72At231, 1e-13));
  }
  CHECK(check_casimir(j52) <= 1e-12);
}

TEST_CASE("Casimir commutes with the generators") {
  for (int twice : {1, 2, 4, 9, 20}) {
    const auto ir = build_irrep(Spin::from_twice(twice), QParameter(189));
    const Eigen::MatrixXd c2 = casimir_matrix(ir);
    CHECK(max_norm(c2 * ir.jz - ir.jz * c2) <= 1e-12);
    CHECK(max_norm(c2 * ir.jplus - ir.jplus * c2) <= 1e-12);
    CHECK(max_norm(c2 * ir.jminus - ir.jminus * c2) <= 1e-12);
  }
}

TEST_CASE("ladder operators do not mix irreps") {
  const std::vector<IrrepMatrices> irreps = {
      build_irrep(Spin::integer(1), QParameter(189)),
      build_irrep(Spin::integer(2), QParameter(189)),
      build_irrep(Spin::integer(4), QParameter(189))};
  const DirectSum sum = direct_sum(irreps);
  for (std::size_t a = 0; a < irreps.size(); ++a) {
    for (std::size_t b = 0; b < irreps.size(); ++b) {
      if (a == b) continue;
      const auto block = sum.jplus.block(sum.offsets[a], sum.offsets[b],
                                         irreps[a].dim(), irreps[b].dim());
      CHECK(max_norm(block) == 0.0);
    }
  }
  // Each diagonal block satisfies the algebra on its own.
  const Eigen::MatrixXd comm = sum.jplus * sum.jminus - sum.jminus * sum.jplus;
  for (std::size_t a = 0; a < irreps.size(); ++a) {
    const int o = sum.offsets[a];
    const int d = irreps[a].dim();
    CHECK(max_norm(comm.block(o, o, d, d) - bracket_of_jz(irreps[a], 2.0, 0.0)) <= 1e-12);
  }
}

TEST_CASE("deformed ladder matrices converge to the undeformed ones") {
  for (int j : {2, 5, 10}) {
    const auto classical = build_irrep(Spin::integer(j), std::nullopt);
    double previous = INFINITY;
    for (int dim : {101, 1001, 10001}) {
      const auto ir = build_irrep(Spin::integer(j), QParameter(dim));
      const double gap = max_norm(ir.jplus - classical.jplus);
      CHECK(gap < previous);
      previous = gap;
    }
  }
}
