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

#ifndef PERIODICA_BAYES_HPP_
#define PERIODICA_BAYES_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "periodica/game.hpp"
#include "periodica/periodicity.hpp"

namespace periodica {

// Joint index over (state, t_1, ..., t_N), state slowest.
class TypeSpace {
 public:
  TypeSpace(std::size_t num_states, std::vector<std::size_t> types_per_player);

  std::size_t size() const { return size_; }
  std::size_t num_states() const { return num_states_; }
  std::size_t num_players() const { return types_.size(); }
  std::size_t num_types(std::size_t player) const { return types_.at(player); }

  std::size_t Index(std::size_t state, const std::vector<std::size_t>& types) const;
  // Inverse of Index: (state, type profile).
  std::pair<std::size_t, std::vector<std::size_t>> Decode(std::size_t index) const;

 private:
  std::size_t num_states_;
  std::vector<std::size_t> types_;
  std::size_t size_;
};

class BayesianGame {
 public:
  // Exactly one of prior (dense over the TypeSpace) and beliefs must be set.
  // beliefs[i][t] is dense over the TypeSpace and supported on entries whose
  // player-i type is t.
  BayesianGame(std::vector<std::string> players, std::vector<std::vector<std::string>> actions,
               std::vector<std::string> states, std::vector<std::vector<std::string>> types,
               std::optional<std::vector<Rational>> prior,
               std::optional<std::vector<std::vector<std::vector<Rational>>>> beliefs,
               std::vector<Game> state_games);

  const std::vector<std::string>& players() const { return players_; }
  const std::vector<std::vector<std::string>>& actions() const { return actions_; }
  const std::vector<std::string>& states() const { return states_; }
  const std::vector<std::vector<std::string>>& types() const { return types_; }
  const TypeSpace& space() const { return space_; }
  bool has_common_prior() const { return prior_.has_value(); }
  const std::vector<Rational>& prior() const;
  const Game& state_game(std::size_t state) const { return state_games_.at(state); }

  // p(state, t_{-i} | t_i), dense over the TypeSpace.
  const std::vector<Rational>& Belief(std::size_t player, std::size_t type) const {
    return beliefs_.at(player).at(type);
  }

 private:
  std::vector<std::string> players_;
  std::vector<std::vector<std::string>> actions_;
  std::vector<std::string> states_;
  std::vector<std::vector<std::string>> types_;
  TypeSpace space_;
  std::optional<std::vector<Rational>> prior_;
  std::vector<std::vector<std::vector<Rational>>> beliefs_;
  std::vector<Game> state_games_;
};

enum class Transform { kExAnte, kInterimCorrelated, kInterimIndependent };

std::string TransformName(Transform t);
std::optional<Transform> ParseTransform(const std::string& name);

// Strategies are maps T_i -> A_i labelled by the concatenated per-type action
// labels in type order; the first type's choice varies slowest.
Game ExAnteTransform(const BayesianGame& bg);

// Players are the type instances, in (player, type) order. An instance is
// labelled by its type label, or "player:type" when type labels repeat.
Game InterimIndependentTransform(const BayesianGame& bg);
Game InterimCorrelatedTransform(const BayesianGame& bg);

Game ApplyTransform(const BayesianGame& bg, Transform t);

PeriodicityReport BayesPeriodicity(const BayesianGame& bg, Transform t, TiePolicy policy,
                                   const GraphOptions& options = {});

struct CellMismatch {
  Profile profile;
  std::size_t player = 0;
  Rational expected;  // e.g. a printed value
  Rational actual;    // recomputed
};

// Cellwise differences; DimensionMismatch unless shapes agree.
std::vector<CellMismatch> DiffPayoffs(const Game& expected, const Game& actual);

}  // namespace periodica

#endif  // PERIODICA_BAYES_HPP_
