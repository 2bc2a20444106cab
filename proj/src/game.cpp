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

#include "periodica/game.hpp"

#include <set>
#include <sstream>

namespace periodica {

std::size_t CheckedProfileCount(const std::vector<std::size_t>& sizes,
                                const std::string& module) {
  std::size_t count = 1;
  for (std::size_t s : sizes) {
    if (s == 0) return 0;
    if (count > kMaxProfiles / s) {
      throw Error(ErrorCode::kSizeLimit, module,
                  "more than " + std::to_string(kMaxProfiles) + " profiles");
    }
    count *= s;
  }
  return count;
}

Game::Game(std::vector<std::string> players, std::vector<std::vector<std::string>> actions,
           std::vector<Rational> payoffs)
    : players_(std::move(players)), actions_(std::move(actions)), payoffs_(std::move(payoffs)) {
  if (players_.size() < 2) {
    throw Error(ErrorCode::kDimensionMismatch, "core", "a game needs at least 2 players");
  }
  if (actions_.size() != players_.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "core",
                std::to_string(players_.size()) + " players but " +
                    std::to_string(actions_.size()) + " action lists");
  }
  std::vector<std::size_t> sizes;
  for (std::size_t i = 0; i < actions_.size(); ++i) {
    if (actions_[i].empty()) {
      throw Error(ErrorCode::kDimensionMismatch, "core",
                  "player '" + players_[i] + "' has no actions");
    }
    std::set<std::string> seen(actions_[i].begin(), actions_[i].end());
    if (seen.size() != actions_[i].size()) {
      throw Error(ErrorCode::kInvalidArgument, "core",
                  "duplicate action label for player '" + players_[i] + "'");
    }
    sizes.push_back(actions_[i].size());
  }
  num_profiles_ = CheckedProfileCount(sizes, "core");
  if (payoffs_.size() != num_profiles_ * players_.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "core",
                "expected " + std::to_string(num_profiles_ * players_.size()) +
                    " payoff entries, got " + std::to_string(payoffs_.size()));
  }
  strides_.assign(sizes.size(), 1);
  for (std::size_t i = sizes.size(); i-- > 1;) strides_[i - 1] = strides_[i] * sizes[i];
}

Game Game::FromFunction(std::vector<std::string> players,
                        std::vector<std::vector<std::string>> actions, const PayoffFn& fn) {
  std::vector<std::size_t> sizes;
  for (const auto& a : actions) sizes.push_back(a.size());
  const std::size_t count = CheckedProfileCount(sizes, "core");
  std::vector<Rational> payoffs;
  payoffs.reserve(count * players.size());
  Profile profile(sizes.size(), 0);
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<Rational> v = fn(profile);
    if (v.size() != players.size()) {
      throw Error(ErrorCode::kDimensionMismatch, "core", "payoff vector length mismatch");
    }
    for (auto& x : v) payoffs.push_back(std::move(x));
    for (std::size_t i = sizes.size(); i-- > 0;) {
      if (++profile[i] < sizes[i]) break;
      profile[i] = 0;
    }
  }
  return Game(std::move(players), std::move(actions), std::move(payoffs));
}

std::vector<std::size_t> Game::shape() const {
  std::vector<std::size_t> s;
  for (const auto& a : actions_) s.push_back(a.size());
  return s;
}

std::optional<std::size_t> Game::FindAction(std::size_t player, const std::string& label) const {
  const auto& a = actions_.at(player);
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] == label) return k;
  }
  return std::nullopt;
}

std::size_t Game::ProfileIndex(const Profile& profile) const {
  if (profile.size() != players_.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "core", "profile length mismatch");
  }
  std::size_t index = 0;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (profile[i] >= actions_[i].size()) {
      throw Error(ErrorCode::kInvalidArgument, "core", "action index out of range");
    }
    index += profile[i] * strides_[i];
  }
  return index;
}

Profile Game::ProfileAt(std::size_t index) const {
  Profile p(players_.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    p[i] = index / strides_[i];
    index %= strides_[i];
  }
  return p;
}

const Rational& Game::payoff(const Profile& profile, std::size_t player) const {
  return payoffs_[ProfileIndex(profile) * players_.size() + player];
}

std::span<const Rational> Game::payoffs(const Profile& profile) const {
  return {payoffs_.data() + ProfileIndex(profile) * players_.size(), players_.size()};
}

std::string Game::ProfileLabel(const Profile& profile) const {
  std::string out = "(";
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i) out += ",";
    out += action_label(i, profile[i]);
  }
  return out + ")";
}

bool operator==(const Game& lhs, const Game& rhs) {
  return lhs.players_ == rhs.players_ && lhs.actions_ == rhs.actions_ &&
         lhs.payoffs_ == rhs.payoffs_;
}

void ForEachOpponentProfile(const Game& game, std::size_t player, std::size_t own_action,
                            const std::function<void(const Profile&)>& fn) {
  const std::size_t n = game.num_players();
  Profile profile(n, 0);
  profile[player] = own_action;
  while (true) {
    fn(profile);
    std::size_t i = n;
    while (i-- > 0) {
      if (i == player) continue;
      if (++profile[i] < game.num_actions(i)) break;
      profile[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) return;
  }
}

void ForEachProfile(const Game& game, const std::function<void(const Profile&)>& fn) {
  for (std::size_t k = 0; k < game.num_profiles(); ++k) fn(game.ProfileAt(k));
}

OpponentArgmax ArgmaxOverOpponents(const Game& game, std::size_t player,
                                   std::size_t own_action) {
  OpponentArgmax out;
  bool first = true;
  ForEachOpponentProfile(game, player, own_action, [&](const Profile& p) {
    const Rational& v = game.payoff(p, player);
    if (first || v > out.value) {
      out.value = v;
      out.maximizers.assign(1, p);
      first = false;
    } else if (v == out.value) {
      out.maximizers.push_back(p);
    }
  });
  return out;
}

std::vector<DegeneracyWitness> ValidateNondegenerate(const Game& game) {
  std::vector<DegeneracyWitness> out;
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    for (std::size_t a = 0; a < game.num_actions(i); ++a) {
      OpponentArgmax m = ArgmaxOverOpponents(game, i, a);
      if (m.maximizers.size() > 1) {
        out.push_back({i, a, m.value, std::move(m.maximizers)});
      }
    }
  }
  return out;
}

DegenerateGameError::DegenerateGameError(std::string module,
                                         std::vector<DegeneracyWitness> witnesses,
                                         const std::string& message)
    : Error(ErrorCode::kDegenerateGame, std::move(module), message),
      witnesses_(std::move(witnesses)) {}

std::string DescribeWitness(const Game& game, const DegeneracyWitness& w) {
  std::ostringstream os;
  os << "U_" << game.player_label(w.player) << " given " << game.action_label(w.player, w.own_action)
     << " ties at value " << w.value << " between";
  for (const Profile& p : w.tied) os << " " << game.ProfileLabel(p);
  return os.str();
}

MixedProfile2x2::MixedProfile2x2(Rational p_in, Rational q_in)
    : p(std::move(p_in)), q(std::move(q_in)) {
  const Rational zero(0), one(1);
  if (p < zero || p > one || q < zero || q > one) {
    throw Error(ErrorCode::kInvalidArgument, "core", "mixed probabilities must lie in [0,1]");
  }
}

void RequireTwoPlayers(const Game& game, const std::string& module) {
  if (game.num_players() != 2) {
    throw Error(ErrorCode::kDimensionMismatch, module,
                "expected a 2-player game, got " + std::to_string(game.num_players()));
  }
}

void Require2x2(const Game& game, const std::string& module) {
  RequireTwoPlayers(game, module);
  if (game.num_actions(0) != 2 || game.num_actions(1) != 2) {
    throw Error(ErrorCode::kDimensionMismatch, module,
                "expected a 2x2 game, got " + std::to_string(game.num_actions(0)) + "x" +
                    std::to_string(game.num_actions(1)));
  }
}

Rational ExpectedUtility2x2(const Game& game, const MixedProfile2x2& profile,
                            std::size_t player) {
  Require2x2(game, "core");
  if (player > 1) throw Error(ErrorCode::kInvalidArgument, "core", "player index out of range");
  const Rational one(1);
  const Rational pa[2] = {profile.p, one - profile.p};
  const Rational qb[2] = {profile.q, one - profile.q};
  Rational sum;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) sum += pa[i] * qb[j] * game.payoff({i, j}, player);
  }
  return sum;
}

}  // namespace periodica
