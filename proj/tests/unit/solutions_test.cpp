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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "periodica/random_games.hpp"
#include "periodica/solutions.hpp"
#include "testing.hpp"

namespace periodica {
namespace {

using testing::Q;

std::vector<Profile> OraclePureNash(const Game& g) {
  std::vector<Profile> out;
  for (std::size_t k = 0; k < g.num_profiles(); ++k) {
    const Profile s = g.ProfileAt(k);
    bool ok = true;
    for (std::size_t i = 0; i < g.num_players() && ok; ++i) {
      Profile t = s;
      for (std::size_t a = 0; a < g.num_actions(i) && ok; ++a) {
        t[i] = a;
        ok = g.payoff(t, i) <= g.payoff(s, i);
      }
    }
    if (ok) out.push_back(s);
  }
  return out;
}

TEST(PureNash, WorkedGames) {
  EXPECT_EQ(PureNash(testing::Game1A()), (std::vector<Profile>{{1, 1}}));
  EXPECT_EQ(PureNash(testing::TestGame()), (std::vector<Profile>{{0, 1}, {1, 0}}));
  EXPECT_TRUE(PureNash(testing::MatchingPennies()).empty());
  EXPECT_EQ(PureNash(testing::BattleOfSexes()), (std::vector<Profile>{{0, 0}, {1, 1}}));
}

TEST(PureNash, MatchesBruteForceOracle) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> size(1, 4);
  for (int k = 0; k < 500; ++k) {
    const auto shape = k % 3 == 0 ? std::vector<std::size_t>{size(rng), size(rng), size(rng)}
                                  : std::vector<std::size_t>{size(rng), size(rng)};
    const Game g = RandomIntegerGame(rng, shape, -3, 3);
    ASSERT_EQ(PureNash(g), OraclePureNash(g));
  }
}

TEST(PointRationalizable, Game1AKeepsThreeActionsEach) {
  const ActionSets s = PointRationalizable(testing::Game1A());
  EXPECT_EQ(s[0], (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(s[1], (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(PointRationalizable(testing::Game1A(), ScanOrder::kReverse), s);
}

TEST(PointRationalizable, Game2CollapsesToEquilibrium) {
  const ActionSets s = PointRationalizable(testing::LoadStrategic("game2.json"));
  EXPECT_EQ(s[0], (std::vector<std::size_t>{1}));
  EXPECT_EQ(s[1], (std::vector<std::size_t>{1}));
}

TEST(IteratedStrictDominance, PrisonersDilemma) {
  const ActionSets s = IteratedStrictDominance(testing::LoadStrategic("pd.json"));
  EXPECT_EQ(s[0], (std::vector<std::size_t>{0}));
  EXPECT_EQ(s[1], (std::vector<std::size_t>{0}));
  const ActionSets all = IteratedStrictDominance(testing::Game1A());
  EXPECT_EQ(all[0].size(), 4u);
}

// Nash actions survive both eliminations, and survivors of point
// rationalizability survive strict dominance.
TEST(SolutionsProperty, EliminationsNest) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::size_t> size(1, 5);
  for (int k = 0; k < 500; ++k) {
    const Game g = RandomIntegerGame(rng, {size(rng), size(rng)}, -4, 4);
    const ActionSets r = PointRationalizable(g);
    const ActionSets d = IteratedStrictDominance(g);
    for (const Profile& n : PureNash(g)) {
      for (std::size_t i = 0; i < 2; ++i) {
        ASSERT_TRUE(std::binary_search(r[i].begin(), r[i].end(), n[i]));
        ASSERT_TRUE(std::binary_search(d[i].begin(), d[i].end(), n[i]));
      }
    }
    for (std::size_t i = 0; i < 2; ++i) {
      ASSERT_FALSE(r[i].empty());
      for (std::size_t a : r[i]) ASSERT_TRUE(std::binary_search(d[i].begin(), d[i].end(), a));
    }
  }
}

TEST(IsBestResponse, ChecksFullActionSet) {
  const Game g = testing::Game1A();
  EXPECT_TRUE(IsBestResponse(g, 0, {0, 2}));
  EXPECT_FALSE(IsBestResponse(g, 0, {0, 0}));
  EXPECT_TRUE(IsBestResponse(g, 1, {2, 2}));
}

TEST(MixedNash2x2, WorkedGames) {
  const MixedNash2x2 t = SolveMixedNash2x2(testing::TestGame());
  EXPECT_EQ(t.p, Q("5/6"));
  EXPECT_EQ(t.q, Q("48/49"));
  EXPECT_EQ(t.payoff_a, Q("146/49"));
  EXPECT_EQ(t.payoff_b, Q("35/6"));
  EXPECT_TRUE(t.interior);
  const MixedNash2x2 b = SolveMixedNash2x2(testing::BattleOfSexes());
  EXPECT_EQ(b.p, Q("2/3"));
  EXPECT_EQ(b.q, Q("1/3"));
  EXPECT_EQ(b.payoff_a, Q("2/3"));
  EXPECT_EQ(b.payoff_b, Q("2/3"));
  const MixedNash2x2 m = SolveMixedNash2x2(testing::MatchingPennies());
  EXPECT_EQ(m.p, Q("1/2"));
  EXPECT_EQ(m.q, Q("1/2"));
  const MixedNash2x2 c = SolveMixedNash2x2(testing::LoadStrategic("collective2.json"));
  EXPECT_EQ(c.p, Q("3/4"));
  EXPECT_EQ(c.payoff_a, Q("3/2"));
}

TEST(MixedNash2x2, FallsBackToPureEquilibrium) {
  const MixedNash2x2 c = SolveMixedNash2x2(testing::LoadStrategic("collective1.json"));
  EXPECT_FALSE(c.closed_form);
  EXPECT_FALSE(c.interior);
  EXPECT_EQ(c.p, Rational(0));
  EXPECT_EQ(c.q, Rational(0));
  EXPECT_EQ(c.payoff_a, Rational(0));
}

// At an interior equilibrium each player is indifferent between own actions.
TEST(MixedNash2x2, InteriorPointsSatisfyIndifference) {
  std::mt19937_64 rng(9);
  int interior = 0;
  for (int k = 0; k < 1000; ++k) {
    const Game g = testing::RandomRationalGame(rng, {2, 2});
    MixedNash2x2 n;
    try {
      n = SolveMixedNash2x2(g);
    } catch (const DegenerateGameError&) {
      continue;
    }
    if (!n.interior) continue;
    ++interior;
    ASSERT_EQ(ExpectedUtility2x2(g, {1, n.q}, 0), ExpectedUtility2x2(g, {0, n.q}, 0));
    ASSERT_EQ(ExpectedUtility2x2(g, {n.p, 1}, 1), ExpectedUtility2x2(g, {n.p, 0}, 1));
    ASSERT_EQ(ExpectedUtility2x2(g, {n.p, n.q}, 0), n.payoff_a);
  }
  EXPECT_GT(interior, 50);
}

}  // namespace
}  // namespace periodica
