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

#include "periodica/solutions.hpp"

#include <algorithm>
#include <functional>

namespace periodica {
namespace {

// Visits every profile in the product of sets[j] for j != player, with
// player's slot fixed to own.
bool AnyOpponentProfile(const ActionSets& sets, std::size_t player, std::size_t own,
                        const std::function<bool(const Profile&)>& pred) {
  const std::size_t n = sets.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (j != player && sets[j].empty()) return false;
  }
  std::vector<std::size_t> cursor(n, 0);
  Profile profile(n);
  while (true) {
    for (std::size_t j = 0; j < n; ++j) profile[j] = j == player ? own : sets[j][cursor[j]];
    if (pred(profile)) return true;
    std::size_t j = n;
    while (j-- > 0) {
      if (j == player) continue;
      if (++cursor[j] < sets[j].size()) break;
      cursor[j] = 0;
    }
    if (j == static_cast<std::size_t>(-1)) return false;
  }
}

ActionSets AllActions(const Game& game) {
  ActionSets sets(game.num_players());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t a = 0; a < game.num_actions(i); ++a) sets[i].push_back(a);
  }
  return sets;
}

std::vector<std::size_t> Ordered(std::size_t count, ScanOrder order) {
  std::vector<std::size_t> v(count);
  for (std::size_t k = 0; k < count; ++k) v[k] = order == ScanOrder::kForward ? k : count - 1 - k;
  return v;
}

void Erase(std::vector<std::size_t>& set, std::size_t value) {
  set.erase(std::find(set.begin(), set.end(), value));
}

}  // namespace

bool IsBestResponse(const Game& game, std::size_t player, const Profile& profile) {
  Profile alt = profile;
  const Rational& own = game.payoff(profile, player);
  for (std::size_t b = 0; b < game.num_actions(player); ++b) {
    alt[player] = b;
    if (game.payoff(alt, player) > own) return false;
  }
  return true;
}

std::vector<Profile> PureNash(const Game& game) {
  std::vector<Profile> out;
  ForEachProfile(game, [&](const Profile& p) {
    for (std::size_t i = 0; i < game.num_players(); ++i) {
      if (!IsBestResponse(game, i, p)) return;
    }
    out.push_back(p);
  });
  return out;
}

ActionSets PointRationalizable(const Game& game, ScanOrder order) {
  ActionSets sets = AllActions(game);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i : Ordered(game.num_players(), order)) {
      for (std::size_t a : Ordered(game.num_actions(i), order)) {
        if (std::find(sets[i].begin(), sets[i].end(), a) == sets[i].end()) continue;
        bool justified = AnyOpponentProfile(
            sets, i, a, [&](const Profile& p) { return IsBestResponse(game, i, p); });
        if (!justified) {
          Erase(sets[i], a);
          changed = true;
        }
      }
    }
  }
  return sets;
}

ActionSets IteratedStrictDominance(const Game& game) {
  ActionSets sets = AllActions(game);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < game.num_players(); ++i) {
      for (std::size_t a : std::vector<std::size_t>(sets[i])) {
        for (std::size_t b : sets[i]) {
          if (b == a) continue;
          bool weak_spot = AnyOpponentProfile(sets, i, a, [&](const Profile& p) {
            Profile q = p;
            q[i] = b;
            return game.payoff(q, i) <= game.payoff(p, i);
          });
          if (!weak_spot) {
            Erase(sets[i], a);
            changed = true;
            break;
          }
        }
      }
    }
  }
  return sets;
}

MixedNash2x2 SolveMixedNash2x2(const Game& game) {
  Require2x2(game, "solutions");
  auto u = [&](std::size_t i, std::size_t j, std::size_t player) {
    return game.payoff({i, j}, player);
  };
  const Rational zero(0), one(1);
  // A's indifference pins q; B's pins p.
  const Rational den_q = u(0, 0, 0) + u(1, 1, 0) - u(0, 1, 0) - u(1, 0, 0);
  const Rational den_p = u(0, 0, 1) + u(1, 1, 1) - u(0, 1, 1) - u(1, 0, 1);

  MixedNash2x2 out;
  bool found = false;
  if (!den_q.is_zero() && !den_p.is_zero()) {
    Rational q = (u(1, 1, 0) - u(0, 1, 0)) / den_q;
    Rational p = (u(1, 1, 1) - u(1, 0, 1)) / den_p;
    if (p >= zero && p <= one && q >= zero && q <= one) {
      out.p = p;
      out.q = q;
      out.closed_form = true;
      out.interior = p > zero && p < one && q > zero && q < one;
      found = true;
    }
  }
  if (!found) {
    std::vector<Profile> pure = PureNash(game);
    if (pure.empty()) {
      throw DegenerateGameError("solutions", {},
                                "no interior mixed equilibrium and no pure equilibrium");
    }
    out.p = pure.front()[0] == 0 ? one : zero;
    out.q = pure.front()[1] == 0 ? one : zero;
  }
  const MixedProfile2x2 point(out.p, out.q);
  out.payoff_a = ExpectedUtility2x2(game, point, 0);
  out.payoff_b = ExpectedUtility2x2(game, point, 1);
  return out;
}

}  // namespace periodica
