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

#ifndef PERIODICA_GAME_HPP_
#define PERIODICA_GAME_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "periodica/errors.hpp"
#include "periodica/rational.hpp"

namespace periodica {

// One action index per player.
using Profile = std::vector<std::size_t>;

inline constexpr std::size_t kMaxProfiles = 1'000'000;

// Product of sizes, or SizeLimit when it exceeds kMaxProfiles.
std::size_t CheckedProfileCount(const std::vector<std::size_t>& sizes,
                                const std::string& module);

// Finite N-player strategic-form game with exact payoffs. Payoffs are
// stored densely; player 0's action index varies slowest.
class Game {
 public:
  using PayoffFn = std::function<std::vector<Rational>(const Profile&)>;

  // payoffs holds num_players() values per profile, profiles in row-major order.
  Game(std::vector<std::string> players, std::vector<std::vector<std::string>> actions,
       std::vector<Rational> payoffs);

  static Game FromFunction(std::vector<std::string> players,
                           std::vector<std::vector<std::string>> actions,
                           const PayoffFn& fn);

  std::size_t num_players() const { return players_.size(); }
  std::size_t num_actions(std::size_t player) const { return actions_.at(player).size(); }
  std::size_t num_profiles() const { return num_profiles_; }
  std::vector<std::size_t> shape() const;

  const std::vector<std::string>& players() const { return players_; }
  const std::vector<std::vector<std::string>>& actions() const { return actions_; }
  const std::string& player_label(std::size_t player) const { return players_.at(player); }
  const std::string& action_label(std::size_t player, std::size_t action) const {
    return actions_.at(player).at(action);
  }
  std::optional<std::size_t> FindAction(std::size_t player, const std::string& label) const;

  std::size_t ProfileIndex(const Profile& profile) const;
  Profile ProfileAt(std::size_t index) const;

  const Rational& payoff(const Profile& profile, std::size_t player) const;
  std::span<const Rational> payoffs(const Profile& profile) const;
  const std::vector<Rational>& raw_payoffs() const { return payoffs_; }

  std::string ProfileLabel(const Profile& profile) const;

  friend bool operator==(const Game& lhs, const Game& rhs);

 private:
  std::vector<std::string> players_;
  std::vector<std::vector<std::string>> actions_;
  std::vector<Rational> payoffs_;
  std::vector<std::size_t> strides_;
  std::size_t num_profiles_ = 0;
};

// Calls fn on every profile with player's action fixed to own_action, in
// lexicographic order of the remaining players' actions.
void ForEachOpponentProfile(const Game& game, std::size_t player, std::size_t own_action,
                            const std::function<void(const Profile&)>& fn);

// Calls fn on every profile of the game in lexicographic order.
void ForEachProfile(const Game& game, const std::function<void(const Profile&)>& fn);

struct OpponentArgmax {
  Rational value;
  // Full profiles attaining value, lexicographic order.
  std::vector<Profile> maximizers;
};

// argmax of U_player(own_action, .) over joint opponent profiles.
OpponentArgmax ArgmaxOverOpponents(const Game& game, std::size_t player,
                                   std::size_t own_action);

struct DegeneracyWitness {
  std::size_t player = 0;
  std::size_t own_action = 0;
  Rational value;
  std::vector<Profile> tied;

  friend bool operator==(const DegeneracyWitness&, const DegeneracyWitness&) = default;
};

std::vector<DegeneracyWitness> ValidateNondegenerate(const Game& game);

class DegenerateGameError : public Error {
 public:
  DegenerateGameError(std::string module, std::vector<DegeneracyWitness> witnesses,
                      const std::string& message);
  const std::vector<DegeneracyWitness>& witnesses() const { return witnesses_; }

 private:
  std::vector<DegeneracyWitness> witnesses_;
};

std::string DescribeWitness(const Game& game, const DegeneracyWitness& witness);

struct MixedProfile2x2 {
  MixedProfile2x2(Rational p_in, Rational q_in);
  Rational p;
  Rational q;
};

// DimensionMismatch unless the game is 2-player with 2 actions each.
void Require2x2(const Game& game, const std::string& module);
void RequireTwoPlayers(const Game& game, const std::string& module);

Rational ExpectedUtility2x2(const Game& game, const MixedProfile2x2& profile,
                            std::size_t player);

}  // namespace periodica

#endif  // PERIODICA_GAME_HPP_
