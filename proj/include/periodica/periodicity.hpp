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

#ifndef PERIODICA_PERIODICITY_HPP_
#define PERIODICA_PERIODICITY_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "periodica/game.hpp"

namespace periodica {

enum class TiePolicy { kStrict, kFirstIndex };

std::string TiePolicyName(TiePolicy policy);

// A (player, action) vertex of the periodicity graph.
struct Node {
  std::size_t player = 0;
  std::size_t action = 0;
  friend auto operator<=>(const Node&, const Node&) = default;
};

struct PhiMap2p {
  std::vector<std::size_t> phi1;  // A action -> B action
  std::vector<std::size_t> phi2;  // B action -> A action
  std::vector<bool> phi1_tied;
  std::vector<bool> phi2_tied;
  bool tie_broken = false;
};

PhiMap2p BuildPhi2p(const Game& game, TiePolicy policy);

class PhiMapNp {
 public:
  PhiMapNp(const Game& game, TiePolicy policy);

  std::size_t num_players() const { return argmax_.size(); }
  // phi_ij(x): player j's component of player i's joint argmax given x.
  std::size_t phi(std::size_t i, std::size_t j, std::size_t x) const {
    return argmax_.at(i).at(x).at(j);
  }
  // Joint argmax opponent profile of player i given x (own slot holds x).
  const Profile& joint(std::size_t i, std::size_t x) const { return argmax_.at(i).at(x); }
  bool tied(std::size_t i, std::size_t x) const { return tied_.at(i).at(x); }
  bool tie_broken() const { return tie_broken_; }

 private:
  std::vector<std::vector<Profile>> argmax_;
  std::vector<std::vector<bool>> tied_;
  bool tie_broken_ = false;
};

inline PhiMapNp BuildPhiNp(const Game& game, TiePolicy policy) { return PhiMapNp(game, policy); }

enum class Verdict { kPeriodic, kNonPeriodic, kDegenerate };
enum class Method { kTwoPlayer, kGraph };

std::string VerdictName(Verdict v);

struct ActionPeriodicity {
  Node node;
  Verdict verdict = Verdict::kNonPeriodic;
  // Returns to the owning player along the representative cycle.
  std::optional<std::size_t> period;
  // Map-composition steps of the representative cycle.
  std::optional<std::size_t> cycle_length;
  // Closed sequence, first == last.
  std::vector<Node> cycle;
  // Graph engine only: all simple cycles through the node up to the bound.
  std::vector<std::vector<Node>> cycles;
  bool cycles_truncated = false;
  // From the action into a cycle of periodic actions.
  std::vector<Node> trace;
  // Some step of the trace used a tie-broken argmax.
  bool tie_dependent = false;
};

struct PeriodicityReport {
  Method method = Method::kTwoPlayer;
  TiePolicy tie_policy = TiePolicy::kStrict;
  bool tie_broken = false;
  std::size_t max_cycle_len = 0;
  std::string transform;  // empty unless produced by a Bayesian transform
  std::vector<ActionPeriodicity> actions;  // ordered by (player, action)

  const ActionPeriodicity& at(std::size_t player, std::size_t action) const;
  std::vector<std::size_t> PeriodicActions(std::size_t player) const;
};

PeriodicityReport PeriodicSet2p(const Game& game, TiePolicy policy);

struct GraphOptions {
  // 0 means the number of (player, action) nodes.
  std::size_t max_cycle_len = 0;
  std::size_t max_cycles_per_node = 10000;
};

PeriodicityReport PeriodicGraphNp(const Game& game, TiePolicy policy,
                                  const GraphOptions& options = {});

struct NashPeriodicity {
  Profile nash;
  bool theorem_conditions = false;  // phi1(x*) = y* and phi2(y*) = x*
  std::optional<std::size_t> period;  // 1 when the conditions hold
  std::vector<Node> cycle;
  // From the general scan.
  Verdict verdict_a = Verdict::kNonPeriodic;
  Verdict verdict_b = Verdict::kNonPeriodic;
  std::optional<std::size_t> period_a;
  std::optional<std::size_t> period_b;
};

NashPeriodicity NashPeriodicityCheck(const Game& game, const Profile& nash, TiePolicy policy);

std::string FormatNodes(const Game& game, const std::vector<Node>& nodes);

}  // namespace periodica

#endif  // PERIODICA_PERIODICITY_HPP_
