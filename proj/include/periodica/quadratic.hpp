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

#ifndef PERIODICA_QUADRATIC_HPP_
#define PERIODICA_QUADRATIC_HPP_

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace periodica {

inline constexpr double kQuadraticTolerance = 1e-9;

// u1 = a1 x + a2 y + a3 xy + a4 x^2 + a5 y^2, u2 likewise with b; x, y >= 0.
struct QuadraticGame {
  std::array<double, 5> a{};
  std::array<double, 5> b{};

  double U1(double x, double y) const;
  double U2(double x, double y) const;
  double DU1Dx(double x, double y) const;
  double DU1Dy(double x, double y) const;
  double DU2Dx(double x, double y) const;
  double DU2Dy(double x, double y) const;

  // Non-finite coefficients raise InvalidArgument.
  void Validate() const;
  // a5 > 0 or b5 > 0.
  std::vector<std::string> Warnings() const;
};

enum class SolutionKind { kNash, kPeriodic };
enum class Curvature { kMax, kMin, kSaddle, kIndeterminate };

std::string SolutionKindName(SolutionKind k);
std::string CurvatureName(Curvature c);

// cx * x + cy * y = rhs, scaled so that max(|cx|, |cy|) = 1 and the first
// nonzero coefficient is positive.
struct LineConstraint {
  double cx = 0;
  double cy = 0;
  double rhs = 0;
};

struct QuadraticSolution {
  SolutionKind kind = SolutionKind::kNash;
  // Solution point, or the least-norm point of the line when underdetermined.
  std::pair<double, double> point{0, 0};
  std::optional<LineConstraint> line;
  // Relative residuals of the two first-order conditions at point.
  std::array<double, 2> foc_residuals{};
  double d1 = 0;
  double d2 = 0;
  Curvature class1 = Curvature::kIndeterminate;
  Curvature class2 = Curvature::kIndeterminate;
  std::vector<std::string> warnings;
  // Negative coordinates fall outside the x, y >= 0 domain.
  bool in_domain = true;
};

// Own-variable conditions du1/dx = 0, du2/dy = 0.
QuadraticSolution SolveNashQuadratic(const QuadraticGame& g);
// Cross conditions du1/dy = 0, du2/dx = 0.
QuadraticSolution SolvePeriodicQuadratic(const QuadraticGame& g);

QuadraticGame PresetCournot(double P, double A, double B, double M);

struct PublicGoodReport {
  QuadraticGame game;
  double nash_total = 0;      // x* + y*
  double periodic_total = 0;  // x_p + y_p
  // u1 along each line as intercept + slope * y.
  double u1_nash_intercept = 0;
  double u1_periodic_intercept = 0;
  double u1_slope = 0;
  double gap = 0;  // u1(x_p, y) - u1(x*, y)
};

PublicGoodReport PresetPublicGood(double A, double B, double C);

}  // namespace periodica

#endif  // PERIODICA_QUADRATIC_HPP_
