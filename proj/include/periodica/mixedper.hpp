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

#ifndef PERIODICA_MIXEDPER_HPP_
#define PERIODICA_MIXEDPER_HPP_

#include <optional>
#include <string>

#include "periodica/game.hpp"
#include "periodica/solutions.hpp"

namespace periodica {

// slope * t + intercept, exact.
struct AffineForm {
  Rational slope;
  Rational intercept;
  Rational At(const Rational& t) const { return slope * t + intercept; }
  friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

// U_A(p, .) as a function of q.
AffineForm PayoffLineA(const Game& game, const Rational& p);
// U_B(., q) as a function of p.
AffineForm PayoffLineB(const Game& game, const Rational& q);

enum class PeriodicMode { kInterior, kCornerMonotone, kUnresolved };

std::string PeriodicModeName(PeriodicMode mode);

struct MixedPeriodicResult {
  // nullopt means Unresolved.
  std::optional<Rational> p_p;
  std::optional<Rational> q_p;
  PeriodicMode mode_a = PeriodicMode::kUnresolved;
  PeriodicMode mode_b = PeriodicMode::kUnresolved;
  // dU_A/dq = alpha_a * p + beta_a; dU_B/dp = alpha_b * q + beta_b.
  Rational alpha_a, beta_a, alpha_b, beta_b;
  std::optional<Rational> payoff_a;
  std::optional<Rational> payoff_b;
  bool robust_a = false;
  bool robust_b = false;
};

MixedPeriodicResult SolveMixedPeriodic2x2(const Game& game);

enum class GameClass { kType1, kType2, kCollectiveAction, kOther };

std::string GameClassName(GameClass c);

struct GameClass2x2 {
  GameClass label = GameClass::kOther;
  bool type1_identities = false;  // off-diagonal own payoffs equal, both players
  bool type2_identities = false;  // diagonal own payoffs equal, both players
  bool collective_conditions = false;
  // p_p = q_N and q_p = p_N.
  bool type1_relations = false;
  // p_p = 1 - q_N and q_p = 1 - p_N.
  bool type2_relations = false;
};

GameClass2x2 Classify2x2(const Game& game, const MixedNash2x2& nash,
                         const MixedPeriodicResult& periodic);

struct PlayerComparison {
  Rational nash_payoff;
  std::optional<Rational> periodic_payoff;
  // sign(periodic - nash), 0 when unresolved.
  int sign = 0;
  AffineForm nash_line;
  std::optional<AffineForm> periodic_line;
};

struct PayoffComparison {
  PlayerComparison a;
  PlayerComparison b;
};

PayoffComparison ComparePayoffs2x2(const Game& game, const MixedNash2x2& nash,
                                   const MixedPeriodicResult& periodic);

}  // namespace periodica

#endif  // PERIODICA_MIXEDPER_HPP_
