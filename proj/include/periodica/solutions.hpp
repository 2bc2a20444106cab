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

#ifndef PERIODICA_SOLUTIONS_HPP_
#define PERIODICA_SOLUTIONS_HPP_

#include <cstddef>
#include <vector>

#include "periodica/game.hpp"

namespace periodica {

// Surviving action indices per player, ascending.
using ActionSets = std::vector<std::vector<std::size_t>>;

// Weak-inequality pure equilibria in lexicographic order.
std::vector<Profile> PureNash(const Game& game);

enum class ScanOrder { kForward, kReverse };

// Iterated removal of actions that are never a best response to a surviving
// pure opponent profile. Removal is one action at a time in scan order.
ActionSets PointRationalizable(const Game& game, ScanOrder order = ScanOrder::kForward);

// Iterated removal of actions strictly dominated by another pure action.
ActionSets IteratedStrictDominance(const Game& game);

// True iff U_player(action, s) is maximal over the player's actions at s.
bool IsBestResponse(const Game& game, std::size_t player, const Profile& profile);

struct MixedNash2x2 {
  Rational p;  // A's weight on its first action
  Rational q;  // B's weight on its first action
  Rational payoff_a;
  Rational payoff_b;
  bool interior = false;
  // False when the point came from the pure-equilibrium fallback.
  bool closed_form = false;
};

MixedNash2x2 SolveMixedNash2x2(const Game& game);

}  // namespace periodica

#endif  // PERIODICA_SOLUTIONS_HPP_
