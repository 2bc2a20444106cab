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

#ifndef PERIODICA_EPISTEMIC_HPP_
#define PERIODICA_EPISTEMIC_HPP_

#include <cstddef>
#include <vector>

#include "periodica/game.hpp"
#include "periodica/periodicity.hpp"

namespace periodica {

// Point-belief type: the owner plays action and assigns probability one to
// (believed_action, believed_type) of the opponent.
struct EpistemicType {
  std::size_t owner = 0;
  std::size_t id = 0;
  std::size_t action = 0;
  std::size_t believed_action = 0;
  std::size_t believed_type = 0;
};

struct EpistemicModel {
  Node root;
  std::vector<EpistemicType> types;
  // types.size() / 2
  std::size_t period() const { return types.size() / 2; }
};

// MalformedCycle unless the cycle is closed, alternates between the two
// players and uses valid indices.
void ValidateCycle(const Game& game, const std::vector<Node>& cycle);

// Every element is a best response to the element after it.
bool RationalizablePeriodicCheck(const Game& game, const std::vector<Node>& cycle);

EpistemicModel BuildEpistemicModel(const Game& game, const std::vector<Node>& cycle);

// Each type's action is a best response to its believed action (full scan).
bool VerifyEpistemicModel(const Game& game, const EpistemicModel& model);

}  // namespace periodica

#endif  // PERIODICA_EPISTEMIC_HPP_
