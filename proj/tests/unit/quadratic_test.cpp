// Copyright 2026 The Periodica Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "periodica/quadratic.hpp"
#include "testing.hpp"

namespace periodica {
namespace {

using testing::ErrorCodeOf;

double Rel(double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

TEST(Quadratic, CournotWorkedCase) {
  const QuadraticGame g = PresetCournot(10, 1, 1, 0);
  const QuadraticSolution n = SolveNashQuadratic(g);
  EXPECT_DOUBLE_EQ(n.point.first, 3);
  EXPECT_DOUBLE_EQ(n.point.second, 3);
  EXPECT_FALSE(n.line.has_value());
  EXPECT_DOUBLE_EQ(n.d1, -1);
  EXPECT_EQ(n.class1, Curvature::kSaddle);
  const QuadraticSolution p = SolvePeriodicQuadratic(g);
  EXPECT_DOUBLE_EQ(p.point.first, 0);
  EXPECT_DOUBLE_EQ(p.point.second, 0);
  EXPECT_TRUE(p.in_domain);
}

TEST(Quadratic, CournotClosedFormOnRandomDraws) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> price(5, 100), cost(0, 4), slope(0.2, 5), m(-2, 0.15);
  for (int k = 0; k < 1000; ++k) {
    const double P = price(rng), B = cost(rng), A = slope(rng), M = m(rng) * A;
    const QuadraticGame g = PresetCournot(P, A, B, M);
    const QuadraticSolution n = SolveNashQuadratic(g);
    const double want = (P - B) / (3 * A - 2 * M);
    ASSERT_LT(Rel(n.point.first, want), 1e-9);
    ASSERT_LT(Rel(n.point.second, want), 1e-9);
    ASSERT_LT(n.foc_residuals[0], 1e-9);
    ASSERT_LT(n.foc_residuals[1], 1e-9);
    const QuadraticSolution p = SolvePeriodicQuadratic(g);
    ASSERT_LT(std::abs(p.point.first), 1e-9);
    ASSERT_LT(std::abs(p.point.second), 1e-9);
  }
}

TEST(Quadratic, GradientsAgreeWithFiniteDifferences) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> coef(-5, 5), pt(0, 10);
  const double h = 1e-4;
  for (int k = 0; k < 1000; ++k) {
    QuadraticGame g;
    for (auto& v : g.a) v = coef(rng);
    for (auto& v : g.b) v = coef(rng);
    const double x = pt(rng), y = pt(rng);
    auto check = [&](double analytic, double numeric) {
      ASSERT_LT(std::abs(analytic - numeric) / std::max(1.0, std::abs(analytic)), 1e-5);
    };
    check(g.DU1Dx(x, y), (g.U1(x + h, y) - g.U1(x - h, y)) / (2 * h));
    check(g.DU1Dy(x, y), (g.U1(x, y + h) - g.U1(x, y - h)) / (2 * h));
    check(g.DU2Dx(x, y), (g.U2(x + h, y) - g.U2(x - h, y)) / (2 * h));
    check(g.DU2Dy(x, y), (g.U2(x, y + h) - g.U2(x, y - h)) / (2 * h));
    // Solutions satisfy their first-order conditions.
    QuadraticSolution n;
    try {
      n = SolveNashQuadratic(g);
    } catch (const Error&) {
      continue;
    }
    const auto [sx, sy] = n.point;
    ASSERT_LT(n.foc_residuals[0], 1e-9);
    ASSERT_LT(std::abs(g.DU1Dx(sx, sy)) / (1 + std::abs(g.a[0]) + std::abs(g.a[2] * sy) + std::abs(2 * g.a[3] * sx)),
              1e-9);
  }
}

TEST(Quadratic, PublicGoodLinesAndGap) {
  const PublicGoodReport r = PresetPublicGood(4, 1, 2);
  EXPECT_DOUBLE_EQ(r.nash_total, 1);
  EXPECT_DOUBLE_EQ(r.periodic_total, 2);
  EXPECT_DOUBLE_EQ(r.gap, -1);
  const QuadraticSolution n = SolveNashQuadratic(r.game);
  ASSERT_TRUE(n.line.has_value());
  EXPECT_DOUBLE_EQ(n.line->cx, 1);
  EXPECT_DOUBLE_EQ(n.line->cy, 1);
  EXPECT_DOUBLE_EQ(n.line->rhs, 1);
  EXPECT_EQ(n.class1, Curvature::kIndeterminate);
  const QuadraticSolution p = SolvePeriodicQuadratic(r.game);
  ASSERT_TRUE(p.line.has_value());
  EXPECT_DOUBLE_EQ(p.line->rhs, 2);
}

TEST(Quadratic, PublicGoodGapOnRandomDraws) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> pa(1, 50), pb(0.1, 5), pc(0.1, 10), py(0, 3);
  for (int k = 0; k < 1000; ++k) {
    const double A = pa(rng), B = pb(rng), C = pc(rng);
    const PublicGoodReport r = PresetPublicGood(A, B, C);
    ASSERT_LT(Rel(r.gap, -C * C / (4 * B)), 1e-9);
    // u1 along each line, evaluated directly.
    for (double y : {0.0, py(rng)}) {
      const double un = r.game.U1(r.nash_total - y, y);
      const double up = r.game.U1(r.periodic_total - y, y);
      ASSERT_LT(Rel(un, r.u1_nash_intercept + r.u1_slope * y), 1e-9);
      ASSERT_LT(Rel(up - un, r.gap), 1e-7);
    }
    const QuadraticSolution n = SolveNashQuadratic(r.game);
    ASSERT_TRUE(n.line.has_value());
    ASSERT_LT(Rel(n.line->rhs, r.nash_total), 1e-9);
  }
  EXPECT_EQ(ErrorCodeOf([] { PresetPublicGood(4, 0, 2); }), ErrorCode::kZeroCurvature);
}

TEST(Quadratic, DegenerateSystems) {
  QuadraticGame zero;
  zero.a = {1, 0, 0, 0, 0};
  EXPECT_EQ(ErrorCodeOf([&] { SolveNashQuadratic(zero); }), ErrorCode::kDegenerateDenominator);
  // Parallel first-order lines with different offsets.
  QuadraticGame par;
  par.a = {1, 0, -2, -1, 0};  // 1 - 2y - 2x = 0
  par.b = {0, 3, -2, 0, -1};  // 3 - 2x - 2y = 0
  EXPECT_EQ(ErrorCodeOf([&] { SolveNashQuadratic(par); }), ErrorCode::kDegenerateDenominator);
  QuadraticGame bad;
  bad.a[0] = std::numeric_limits<double>::infinity();
  EXPECT_EQ(ErrorCodeOf([&] { SolveNashQuadratic(bad); }), ErrorCode::kInvalidArgument);
}

TEST(Quadratic, WarningsAndDomain) {
  QuadraticGame g;
  g.a = {-4, 0, 0, -1, 1};
  g.b = {0, 2, 0, 0, -1};
  const QuadraticSolution n = SolveNashQuadratic(g);
  EXPECT_DOUBLE_EQ(n.point.first, -2);
  EXPECT_DOUBLE_EQ(n.point.second, 1);
  EXPECT_FALSE(n.in_domain);
  EXPECT_EQ(n.warnings.size(), 1u);
}

}  // namespace
}  // namespace periodica
