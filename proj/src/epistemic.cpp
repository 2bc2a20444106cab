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

#include "periodica/epistemic.hpp"

#include "periodica/solutions.hpp"

namespace periodica {
namespace {

[[noreturn]] void Malformed(const std::string& why) {
  throw Error(ErrorCode::kMalformedCycle, "epistemic", why);
}

bool Responds(const Game& game, std::size_t player, std::size_t action, std::size_t against) {
  Profile p(2);
  p[player] = action;
  p[1 - player] = against;
  return IsBestResponse(game, player, p);
}

}  // namespace

void ValidateCycle(const Game& game, const std::vector<Node>& cycle) {
  RequireTwoPlayers(game, "epistemic");
  if (cycle.size() < 3) Malformed("a cycle needs at least two distinct steps");
  if (cycle.front() != cycle.back()) Malformed("cycle is not closed");
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    const Node& n = cycle[k];
    if (n.player > 1 || n.action >= game.num_actions(n.player)) Malformed("node out of range");
    if (k + 1 < cycle.size() && cycle[k + 1].player == n.player) {
      Malformed("cycle does not alternate between players");
    }
  }
}

bool RationalizablePeriodicCheck(const Game& game, const std::vector<Node>& cycle) {
  ValidateCycle(game, cycle);
  for (std::size_t k = 0; k + 1 < cycle.size(); ++k) {
    if (!Responds(game, cycle[k].player, cycle[k].action, cycle[k + 1].action)) return false;
  }
  return true;
}

EpistemicModel BuildEpistemicModel(const Game& game, const std::vector<Node>& cycle) {
  if (!RationalizablePeriodicCheck(game, cycle)) {
    throw Error(ErrorCode::kNotRationalizableCycle, "epistemic",
                "some element is not a best response to its successor: " +
                    FormatNodes(game, cycle));
  }
  EpistemicModel m;
  m.root = cycle.front();
  const std::size_t len = cycle.size() - 1;
  for (std::size_t k = 0; k < len; ++k) {
    m.types.push_back({cycle[k].player, k, cycle[k].action, cycle[k + 1].action, (k + 1) % len});
  }
  return m;
}

bool VerifyEpistemicModel(const Game& game, const EpistemicModel& model) {
  const std::size_t len = model.types.size();
  for (const EpistemicType& t : model.types) {
    if (t.believed_type >= len) return false;
    const EpistemicType& next = model.types[t.believed_type];
    if (next.owner == t.owner || next.action != t.believed_action) return false;
    if (!Responds(game, t.owner, t.action, t.believed_action)) return false;
  }
  // Belief graph is one cycle covering every type.
  std::vector<bool> seen(len, false);
  std::size_t at = 0;
  for (std::size_t k = 0; k < len; ++k) {
    if (seen[at]) return false;
    seen[at] = true;
    at = model.types[at].believed_type;
  }
  return at == 0;
}

}  // namespace periodica
