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

#include "periodica/coco.hpp"

#include <algorithm>

namespace periodica {

std::pair<Game, Game> CocoDecompose(const Game& game) {
  RequireTwoPlayers(game, "coco");
  const Rational half(1, 2);
  Game team = Game::FromFunction(game.players(), game.actions(), [&](const Profile& p) {
    Rational v = (game.payoff(p, 0) + game.payoff(p, 1)) * half;
    return std::vector<Rational>{v, v};
  });
  Game zero_sum = Game::FromFunction(game.players(), game.actions(), [&](const Profile& p) {
    Rational v = (game.payoff(p, 0) - game.payoff(p, 1)) * half;
    return std::vector<Rational>{v, -v};
  });
  return {std::move(team), std::move(zero_sum)};
}

ZeroSumValue ZeroSumValue2x2(const Game& zs) {
  Require2x2(zs, "coco");
  ForEachProfile(zs, [&](const Profile& p) {
    if (zs.payoff(p, 1) != -zs.payoff(p, 0)) {
      throw Error(ErrorCode::kNotZeroSum, "coco", "payoffs do not cancel at " + zs.ProfileLabel(p));
    }
  });
  auto m = [&](std::size_t i, std::size_t j) { return zs.payoff({i, j}, 0); };

  ZeroSumValue out;
  std::size_t best_row = 0, best_col = 0;
  for (std::size_t i = 0; i < 2; ++i) {
    Rational row_min = std::min(m(i, 0), m(i, 1));
    if (i == 0 || row_min > out.maximin) {
      out.maximin = row_min;
      best_row = i;
    }
  }
  for (std::size_t j = 0; j < 2; ++j) {
    Rational col_max = std::max(m(0, j), m(1, j));
    if (j == 0 || col_max < out.minimax) {
      out.minimax = col_max;
      best_col = j;
    }
  }
  if (out.maximin == out.minimax) {
    out.saddle = true;
    out.value = out.maximin;
    out.saddle_profile = Profile{best_row, best_col};
    return out;
  }
  const Rational den = m(0, 0) + m(1, 1) - m(0, 1) - m(1, 0);
  if (den.is_zero()) {
    throw DegenerateGameError("coco", {}, "no saddle point and a zero mixed-value denominator");
  }
  out.value = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) / den;
  out.p = (m(1, 1) - m(1, 0)) / den;
  out.q = (m(1, 1) - m(0, 1)) / den;
  return out;
}

CocoSolution SolveCoco(const Game& game) {
  Require2x2(game, "coco");
  CocoSolution s;
  bool first = true;
  ForEachProfile(game, [&](const Profile& p) {
    Rational sum = game.payoff(p, 0) + game.payoff(p, 1);
    if (first || sum > s.v_sharp) {
      s.v_sharp = sum;
      s.team_profile = p;
      s.team_tie = false;
      first = false;
    } else if (sum == s.v_sharp) {
      s.team_tie = true;
    }
  });
  auto [team, zero_sum] = CocoDecompose(game);
  s.zero_sum = ZeroSumValue2x2(zero_sum);
  s.v_s = s.zero_sum.value;
  const Rational half(1, 2);
  s.value_a = s.v_sharp * half + s.v_s;
  s.value_b = s.v_sharp * half - s.v_s;
  s.side_payment = s.value_a - game.payoff(s.team_profile, 0);
  return s;
}

}  // namespace periodica
