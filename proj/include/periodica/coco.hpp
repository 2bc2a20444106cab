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

#ifndef PERIODICA_COCO_HPP_
#define PERIODICA_COCO_HPP_

#include <optional>
#include <utility>

#include "periodica/game.hpp"

namespace periodica {

// (team game, zero-sum game); team + zero-sum recovers player A's payoffs.
std::pair<Game, Game> CocoDecompose(const Game& game);

struct ZeroSumValue {
  Rational value;
  Rational maximin;  // pure
  Rational minimax;  // pure
  bool saddle = false;
  std::optional<Profile> saddle_profile;
  // Optimal first-action weights when the value needs mixing.
  std::optional<Rational> p;
  std::optional<Rational> q;
};

ZeroSumValue ZeroSumValue2x2(const Game& zero_sum);

struct CocoSolution {
  Profile team_profile;
  bool team_tie = false;
  Rational v_sharp;
  Rational v_s;
  // Paid by B to A; negative means A pays B.
  Rational side_payment;
  Rational value_a;
  Rational value_b;
  ZeroSumValue zero_sum;
};

CocoSolution SolveCoco(const Game& game);

}  // namespace periodica

#endif  // PERIODICA_COCO_HPP_
