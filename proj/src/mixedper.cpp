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

#include "periodica/mixedper.hpp"

namespace periodica {
namespace {

struct Cells {
  Rational a, b, c, d;  // (A1,B1), (A1,B2), (A2,B1), (A2,B2)
};

Cells CellsOf(const Game& game, std::size_t player) {
  return {game.payoff({0, 0}, player), game.payoff({0, 1}, player), game.payoff({1, 0}, player),
          game.payoff({1, 1}, player)};
}

struct OneSide {
  PeriodicMode mode = PeriodicMode::kUnresolved;
  Rational alpha, beta;
  std::optional<Rational> own;       // pinned own probability (interior)
  std::optional<Rational> opponent;  // pinned opponent probability (corner)
};

// Derivative alpha * t + beta of a player's payoff in the opponent variable,
// t being the player's own probability.
OneSide Analyze(const Rational& alpha, const Rational& beta) {
  OneSide s;
  s.alpha = alpha;
  s.beta = beta;
  const Rational zero(0), one(1);
  if (!alpha.is_zero()) {
    Rational root = -beta / alpha;
    if (root >= zero && root <= one) {
      s.mode = PeriodicMode::kInterior;
      s.own = root;
      return s;
    }
  }
  if (alpha.is_zero() && beta.is_zero()) return s;
  // No root in [0,1]: the sign at t = 0 holds throughout.
  s.mode = PeriodicMode::kCornerMonotone;
  s.opponent = beta.sign() > 0 ? one : zero;
  return s;
}

void Assign(std::optional<Rational>& slot, const std::optional<Rational>& value,
            const char* name) {
  if (!value) return;
  if (slot && *slot != *value) {
    throw Error(ErrorCode::kConflict, "mixedper",
                std::string(name) + " assigned both " + slot->ToDisplay() + " and " +
                    value->ToDisplay());
  }
  slot = value;
}

}  // namespace

AffineForm PayoffLineA(const Game& game, const Rational& p) {
  Require2x2(game, "mixedper");
  const Cells u = CellsOf(game, 0);
  const Rational one(1);
  return {(u.a - u.b - u.c + u.d) * p + (u.c - u.d), p * u.b + (one - p) * u.d};
}

AffineForm PayoffLineB(const Game& game, const Rational& q) {
  Require2x2(game, "mixedper");
  const Cells u = CellsOf(game, 1);
  const Rational one(1);
  return {(u.a - u.b - u.c + u.d) * q + (u.b - u.d), q * u.c + (one - q) * u.d};
}

std::string PeriodicModeName(PeriodicMode mode) {
  switch (mode) {
    case PeriodicMode::kInterior: return "Interior";
    case PeriodicMode::kCornerMonotone: return "CornerMonotone";
    case PeriodicMode::kUnresolved: return "Unresolved";
  }
  return "?";
}

std::string GameClassName(GameClass c) {
  switch (c) {
    case GameClass::kType1: return "Type1";
    case GameClass::kType2: return "Type2";
    case GameClass::kCollectiveAction: return "CollectiveAction";
    case GameClass::kOther: return "Other";
  }
  return "?";
}

MixedPeriodicResult SolveMixedPeriodic2x2(const Game& game) {
  Require2x2(game, "mixedper");
  const Cells ua = CellsOf(game, 0);
  const Cells ub = CellsOf(game, 1);
  const OneSide a = Analyze(ua.a - ua.b - ua.c + ua.d, ua.c - ua.d);
  const OneSide b = Analyze(ub.a - ub.b - ub.c + ub.d, ub.b - ub.d);

  MixedPeriodicResult r;
  r.mode_a = a.mode;
  r.mode_b = b.mode;
  r.alpha_a = a.alpha;
  r.beta_a = a.beta;
  r.alpha_b = b.alpha;
  r.beta_b = b.beta;
  Assign(r.p_p, a.own, "p_p");
  Assign(r.q_p, a.opponent, "q_p");
  Assign(r.q_p, b.own, "q_p");
  Assign(r.p_p, b.opponent, "p_p");

  if (r.p_p) {
    const AffineForm line = PayoffLineA(game, *r.p_p);
    r.robust_a = line.slope.is_zero();
    if (r.q_p) {
      r.payoff_a = line.At(*r.q_p);
    } else if (r.robust_a) {
      r.payoff_a = line.intercept;
    }
  }
  if (r.q_p) {
    const AffineForm line = PayoffLineB(game, *r.q_p);
    r.robust_b = line.slope.is_zero();
    if (r.p_p) {
      r.payoff_b = line.At(*r.p_p);
    } else if (r.robust_b) {
      r.payoff_b = line.intercept;
    }
  }
  return r;
}

GameClass2x2 Classify2x2(const Game& game, const MixedNash2x2& nash,
                         const MixedPeriodicResult& periodic) {
  Require2x2(game, "mixedper");
  const Cells ua = CellsOf(game, 0);
  const Cells ub = CellsOf(game, 1);
  const Rational one(1);
  GameClass2x2 c;
  c.type1_identities = ua.b == ua.c && ub.b == ub.c;
  c.type2_identities = ua.a == ua.d && ub.a == ub.d;
  if (periodic.p_p && periodic.q_p) {
    c.type1_relations = *periodic.p_p == nash.q && *periodic.q_p == nash.p;
    c.type2_relations = *periodic.p_p == one - nash.q && *periodic.q_p == one - nash.p;
  }
  c.collective_conditions = periodic.mode_a == PeriodicMode::kCornerMonotone &&
                            periodic.mode_b == PeriodicMode::kCornerMonotone &&
                            periodic.payoff_a && periodic.payoff_b &&
                            *periodic.payoff_a >= nash.payoff_a &&
                            *periodic.payoff_b >= nash.payoff_b;
  if (c.type1_identities) {
    c.label = GameClass::kType1;
  } else if (c.type2_identities) {
    c.label = GameClass::kType2;
  } else if (c.collective_conditions) {
    c.label = GameClass::kCollectiveAction;
  }
  return c;
}

PayoffComparison ComparePayoffs2x2(const Game& game, const MixedNash2x2& nash,
                                   const MixedPeriodicResult& periodic) {
  PayoffComparison out;
  out.a.nash_payoff = nash.payoff_a;
  out.a.nash_line = PayoffLineA(game, nash.p);
  out.a.periodic_payoff = periodic.payoff_a;
  if (periodic.p_p) out.a.periodic_line = PayoffLineA(game, *periodic.p_p);
  if (periodic.payoff_a) out.a.sign = (*periodic.payoff_a - nash.payoff_a).sign();

  out.b.nash_payoff = nash.payoff_b;
  out.b.nash_line = PayoffLineB(game, nash.q);
  out.b.periodic_payoff = periodic.payoff_b;
  if (periodic.q_p) out.b.periodic_line = PayoffLineB(game, *periodic.q_p);
  if (periodic.payoff_b) out.b.sign = (*periodic.payoff_b - nash.payoff_b).sign();
  return out;
}

}  // namespace periodica
