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

#include "periodica/quadratic.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>

#include "periodica/errors.hpp"

namespace periodica {
namespace {

double RelativeResidual(std::initializer_list<double> terms) {
  double sum = 0, scale = 1;
  for (double t : terms) {
    sum += t;
    scale += std::abs(t);
  }
  return std::abs(sum) / scale;
}

Curvature Classify(double det, double diag) {
  if (det < 0) return Curvature::kSaddle;
  if (det > 0 && diag < 0) return Curvature::kMax;
  if (det > 0 && diag > 0) return Curvature::kMin;
  return Curvature::kIndeterminate;
}

// Solves [[m00, m01], [m10, m11]] (x, y) = (r0, r1).
void Solve2(double m00, double m01, double m10, double m11, double r0, double r1,
            QuadraticSolution& out) {
  const double det = m00 * m11 - m01 * m10;
  const double scale = std::max({std::abs(m00 * m11), std::abs(m01 * m10), 1e-300});
  if (std::abs(det) > 1e-12 * scale) {
    out.point = {(r0 * m11 - m01 * r1) / det, (m00 * r1 - m10 * r0) / det};
    return;
  }
  // Singular: consistent rank-1 systems give a line.
  double cx = m00, cy = m01, rhs = r0;
  if (std::abs(cx) + std::abs(cy) == 0) {
    cx = m10;
    cy = m11;
    rhs = r1;
  }
  const double norm = std::max(std::abs(cx), std::abs(cy));
  if (norm == 0) {
    throw Error(ErrorCode::kDegenerateDenominator, "quadratic",
                "first-order conditions vanish identically");
  }
  const double consistency =
      std::max({std::abs(m00 * m11 - m01 * m10), std::abs(m00 * r1 - m10 * r0),
                std::abs(m01 * r1 - m11 * r0)});
  const double ref = std::max({std::abs(m00), std::abs(m01), std::abs(m10), std::abs(m11),
                               std::abs(r0), std::abs(r1), 1.0});
  if (consistency > 1e-12 * ref * ref) {
    throw Error(ErrorCode::kDegenerateDenominator, "quadratic",
                "singular first-order system with no solution");
  }
  const double sign = (cx != 0 ? cx : cy) < 0 ? -1.0 : 1.0;
  LineConstraint line{sign * cx / norm, sign * cy / norm, sign * rhs / norm};
  const double nn = line.cx * line.cx + line.cy * line.cy;
  out.point = {line.cx * line.rhs / nn, line.cy * line.rhs / nn};
  out.line = line;
}

void Diagnose(const QuadraticGame& g, QuadraticSolution& out) {
  out.d1 = -g.a[2] * g.a[2] + 4 * g.a[3] * g.a[4];
  out.d2 = -g.b[2] * g.b[2] + 4 * g.b[3] * g.b[4];
  out.class1 = Classify(out.d1, g.a[3]);
  out.class2 = Classify(out.d2, g.b[3]);
  out.warnings = g.Warnings();
  out.in_domain = out.line || (out.point.first >= 0 && out.point.second >= 0);
}

}  // namespace

double QuadraticGame::U1(double x, double y) const {
  return a[0] * x + a[1] * y + a[2] * x * y + a[3] * x * x + a[4] * y * y;
}
double QuadraticGame::U2(double x, double y) const {
  return b[0] * x + b[1] * y + b[2] * x * y + b[3] * x * x + b[4] * y * y;
}
double QuadraticGame::DU1Dx(double x, double y) const { return a[0] + a[2] * y + 2 * a[3] * x; }
double QuadraticGame::DU1Dy(double x, double y) const { return a[1] + a[2] * x + 2 * a[4] * y; }
double QuadraticGame::DU2Dx(double x, double y) const { return b[0] + b[2] * y + 2 * b[3] * x; }
double QuadraticGame::DU2Dy(double x, double y) const { return b[1] + b[2] * x + 2 * b[4] * y; }

void QuadraticGame::Validate() const {
  for (double v : a) {
    if (!std::isfinite(v)) throw Error(ErrorCode::kInvalidArgument, "quadratic", "non-finite coefficient");
  }
  for (double v : b) {
    if (!std::isfinite(v)) throw Error(ErrorCode::kInvalidArgument, "quadratic", "non-finite coefficient");
  }
}

std::vector<std::string> QuadraticGame::Warnings() const {
  std::vector<std::string> w;
  if (a[4] > 0) w.push_back("a5 > 0: u1 is convex in y");
  if (b[4] > 0) w.push_back("b5 > 0: u2 is convex in y");
  return w;
}

std::string SolutionKindName(SolutionKind k) {
  return k == SolutionKind::kNash ? "Nash" : "Periodic";
}

std::string CurvatureName(Curvature c) {
  switch (c) {
    case Curvature::kMax: return "Max";
    case Curvature::kMin: return "Min";
    case Curvature::kSaddle: return "Saddle";
    case Curvature::kIndeterminate: return "Indeterminate";
  }
  return "?";
}

QuadraticSolution SolveNashQuadratic(const QuadraticGame& g) {
  g.Validate();
  QuadraticSolution s;
  s.kind = SolutionKind::kNash;
  // a1 + a3 y + 2 a4 x = 0, b2 + b3 x + 2 b5 y = 0.
  Solve2(2 * g.a[3], g.a[2], g.b[2], 2 * g.b[4], -g.a[0], -g.b[1], s);
  const auto [x, y] = s.point;
  s.foc_residuals = {RelativeResidual({g.a[0], g.a[2] * y, 2 * g.a[3] * x}),
                     RelativeResidual({g.b[1], g.b[2] * x, 2 * g.b[4] * y})};
  Diagnose(g, s);
  return s;
}

QuadraticSolution SolvePeriodicQuadratic(const QuadraticGame& g) {
  g.Validate();
  QuadraticSolution s;
  s.kind = SolutionKind::kPeriodic;
  // a2 + a3 x + 2 a5 y = 0, b1 + b3 y + 2 b4 x = 0.
  Solve2(g.a[2], 2 * g.a[4], 2 * g.b[3], g.b[2], -g.a[1], -g.b[0], s);
  const auto [x, y] = s.point;
  s.foc_residuals = {RelativeResidual({g.a[1], g.a[2] * x, 2 * g.a[4] * y}),
                     RelativeResidual({g.b[0], g.b[2] * y, 2 * g.b[3] * x})};
  Diagnose(g, s);
  return s;
}

QuadraticGame PresetCournot(double P, double A, double B, double M) {
  QuadraticGame g;
  g.a = {P - B, 0, -A, -A + M, 0};
  g.b = {0, P - B, -A, 0, -A + M};
  g.Validate();
  return g;
}

PublicGoodReport PresetPublicGood(double A, double B, double C) {
  if (B == 0) throw Error(ErrorCode::kZeroCurvature, "quadratic", "B must be nonzero");
  PublicGoodReport r;
  r.game.a = {A - C, A, -2 * B, -B, -B};
  r.game.b = {A, A - C, -2 * B, -B, -B};
  r.game.Validate();
  r.nash_total = (A - C) / (2 * B);
  r.periodic_total = A / (2 * B);
  r.u1_nash_intercept = (A - C) * (A - C) / (4 * B);
  r.u1_periodic_intercept = (A * A - 2 * A * C) / (4 * B);
  r.u1_slope = C;
  r.gap = -C * C / (4 * B);
  return r;
}

}  // namespace periodica
