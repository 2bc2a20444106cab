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

#include <random>

#include "periodica/bayes.hpp"
#include "periodica/io.hpp"
#include "testing.hpp"

namespace periodica {
namespace {

using testing::ErrorCodeOf;
using testing::Q;

GameFile Load(const std::string& name) { return LoadGameFile(testing::FixturePath(name)); }
const BayesianGame& Body(const GameFile& f) { return std::get<BayesianGame>(f.body); }

Game Stage() { return testing::Make2p({{{3, 1}, {0, 2}}, {{1, 0}, {2, 4}}}); }

BayesianGame Wrapper(const Game& stage) {
  return BayesianGame(stage.players(), stage.actions(), {"s"}, {{"t"}, {"u"}},
                      std::vector<Rational>{1}, std::nullopt, {stage});
}

TEST(TypeSpace, StateVariesSlowest) {
  const TypeSpace s(2, {2, 3});
  EXPECT_EQ(s.size(), 12u);
  EXPECT_EQ(s.Index(0, {0, 1}), 1u);
  EXPECT_EQ(s.Index(0, {1, 0}), 3u);
  EXPECT_EQ(s.Index(1, {0, 0}), 6u);
  for (std::size_t e = 0; e < s.size(); ++e) {
    const auto [state, types] = s.Decode(e);
    EXPECT_EQ(s.Index(state, types), e);
  }
}

TEST(BayesianGame, SingleStateWrapperReproducesStageGame) {
  const Game stage = Stage();
  const BayesianGame bg = Wrapper(stage);
  for (Transform t : {Transform::kExAnte, Transform::kInterimCorrelated, Transform::kInterimIndependent}) {
    const Game g = ApplyTransform(bg, t);
    EXPECT_EQ(g.raw_payoffs(), stage.raw_payoffs()) << TransformName(t);
  }
}

TEST(BayesianGame, PriorValidation) {
  const Game stage = Stage();
  auto make = [&](std::vector<Rational> prior) {
    return BayesianGame(stage.players(), stage.actions(), {"s"}, {{"t1", "t2"}, {"u"}}, prior, std::nullopt,
                        {stage});
  };
  EXPECT_EQ(ErrorCodeOf([&] { make({Q("1/2"), Q("49/100")}); }), ErrorCode::kInvalidPrior);
  EXPECT_EQ(ErrorCodeOf([&] { make({Q("3/2"), Q("-1/2")}); }), ErrorCode::kInvalidPrior);
  EXPECT_EQ(ErrorCodeOf([&] { make({1, 0}); }), ErrorCode::kInvalidPrior);
  EXPECT_EQ(ErrorCodeOf([&] { make({1}); }), ErrorCode::kInvalidPrior);
  EXPECT_NO_THROW(make({Q("1/4"), Q("3/4")}));
}

TEST(BayesianGame, BeliefValidation) {
  const Game stage = Stage();
  using B = std::vector<std::vector<std::vector<Rational>>>;
  auto make = [&](B beliefs) {
    return BayesianGame(stage.players(), stage.actions(), {"s"}, {{"t1", "t2"}, {"u"}}, std::nullopt, beliefs,
                        {stage});
  };
  const B good{{{1, 0}, {0, 1}}, {{Q("1/3"), Q("2/3")}}};
  EXPECT_NO_THROW(make(good));
  B off = good;
  off[0][0] = {Q("1/2"), Q("1/2")};  // weight on the other own type
  EXPECT_EQ(ErrorCodeOf([&] { make(off); }), ErrorCode::kInvalidPrior);
  B sum = good;
  sum[1][0] = {Q("1/3"), Q("1/3")};
  EXPECT_EQ(ErrorCodeOf([&] { make(sum); }), ErrorCode::kInvalidPrior);
  const BayesianGame bg = make(good);
  EXPECT_EQ(ErrorCodeOf([&] { ExAnteTransform(bg); }), ErrorCode::kNoCommonPrior);
  EXPECT_EQ(InterimIndependentTransform(bg).num_players(), 3u);
}

TEST(BayesianGame, ExAnteSizeLimit) {
  std::vector<std::string> acts;
  for (int k = 0; k < 10; ++k) acts.push_back("x" + std::to_string(k));
  const Game stage = Game::FromFunction({"A", "B"}, {acts, {"y"}}, [](const Profile&) {
    return std::vector<Rational>{0, 0};
  });
  std::vector<std::string> types;
  for (int k = 0; k < 7; ++k) types.push_back("t" + std::to_string(k));
  std::vector<Rational> prior(7, Q("1/7"));
  const BayesianGame bg(stage.players(), stage.actions(), {"s"}, {types, {"u"}}, prior, std::nullopt, {stage});
  EXPECT_EQ(ErrorCodeOf([&] { ExAnteTransform(bg); }), ErrorCode::kSizeLimit);
}

TEST(Transforms, InterimCorrelatedReproducesPrintedTable) {
  const GameFile f = Load("bayes_interim_correlated.json");
  const Game g = InterimCorrelatedTransform(Body(f));
  EXPECT_EQ(g.payoff({0, 0}, 0), Q("-9/2"));
  EXPECT_EQ(g.payoff({0, 0}, 1), Q("-9/2"));
  EXPECT_TRUE(DiffPayoffs(f.printed.at("interim-correlated"), g).empty());
  const PeriodicityReport r = BayesPeriodicity(Body(f), Transform::kInterimCorrelated, TiePolicy::kFirstIndex);
  EXPECT_EQ(r.transform, "interim-correlated");
}

// With the state-1 cell (a1, b2) as printed, (-10, 10), exactly one entry of
// the interim table disagrees.
TEST(Transforms, UncorrectedCellMismatchesOnce) {
  const GameFile f = Load("bayes_interim_correlated.json");
  const BayesianGame& bg = Body(f);
  const Game& s1 = bg.state_game(0);
  const Game verbatim = Game::FromFunction(s1.players(), s1.actions(), [&](const Profile& p) {
    std::vector<Rational> u(s1.payoffs(p).begin(), s1.payoffs(p).end());
    if (p == Profile{0, 1}) u[1] = 10;
    return u;
  });
  const BayesianGame raw(bg.players(), bg.actions(), bg.states(), bg.types(), bg.prior(), std::nullopt,
                         {verbatim, bg.state_game(1)});
  const auto diff = DiffPayoffs(f.printed.at("interim-correlated"), InterimCorrelatedTransform(raw));
  ASSERT_EQ(diff.size(), 1u);
  EXPECT_EQ(diff[0].profile, (Profile{0, 1}));
  EXPECT_EQ(diff[0].player, 1u);
  EXPECT_EQ(diff[0].expected, Q("-9/2"));
  EXPECT_EQ(diff[0].actual, Q("11/2"));
}

TEST(Transforms, ExAnteTableAndPrintedMismatches) {
  const GameFile f = Load("bayes_exante.json");
  const Game g = ExAnteTransform(Body(f));
  EXPECT_EQ(g.actions()[0], (std::vector<std::string>{"UU", "UD", "DU", "DD"}));
  const auto du = *g.FindAction(0, "DU");
  EXPECT_EQ(g.payoff({du, 0}, 0), Rational(-1));
  EXPECT_EQ(g.payoff({du, 0}, 1), Q("1/20"));
  EXPECT_EQ(g.payoff({du, 1}, 0), Q("1/2"));
  EXPECT_EQ(g.payoff({du, 1}, 1), Q("1/2"));
  const auto diff = DiffPayoffs(f.printed.at("ex-ante"), g);
  ASSERT_EQ(diff.size(), 4u);
  EXPECT_EQ(diff[2].profile, (Profile{1, 1}));
  EXPECT_EQ(diff[2].expected, Rational(-1));
  EXPECT_EQ(diff[2].actual, Q("3/2"));
}

TEST(Transforms, InterimIndependentPlayersAndMismatches) {
  const GameFile f = Load("bayes_exante.json");
  const Game g = InterimIndependentTransform(Body(f));
  EXPECT_EQ(g.players(), (std::vector<std::string>{"t1", "t1'", "t2"}));
  const auto diff = DiffPayoffs(f.printed.at("interim-independent"), g);
  ASSERT_EQ(diff.size(), 2u);
  for (const auto& d : diff) {
    EXPECT_EQ(d.player, 1u);
    EXPECT_EQ(d.profile[1], 1u);
    EXPECT_EQ(d.profile[2], 1u);
    EXPECT_EQ(d.expected, Rational(0));
    EXPECT_EQ(d.actual, Rational(5));
  }
}

TEST(Transforms, RepeatedTypeLabelsArePrefixed) {
  const Game stage = Stage();
  const BayesianGame bg(stage.players(), stage.actions(), {"s"}, {{"t"}, {"t"}}, std::vector<Rational>{1},
                        std::nullopt, {stage});
  EXPECT_EQ(InterimIndependentTransform(bg).players(), (std::vector<std::string>{"A:t", "B:t"}));
}

TEST(Transforms, DiffPayoffsRequiresEqualShapes) {
  EXPECT_EQ(ErrorCodeOf([] { DiffPayoffs(Stage(), testing::Game1A()); }), ErrorCode::kDimensionMismatch);
}

TEST(BayesProperty, TransformsMatchExpectationOracle) {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 200; ++k) {
    const BayesianGame bg = testing::RandomBayesian(rng, k % 4 == 3);
    ASSERT_EQ(testing::BayesOracleMismatches(bg), 0u) << k;
  }
}

TEST(BayesProperty, TransformedGamesHavePeriodicActions) {
  std::mt19937_64 rng(32);
  for (int k = 0; k < 100; ++k) {
    const BayesianGame bg = testing::RandomBayesian(rng);
    for (Transform t : {Transform::kExAnte, Transform::kInterimIndependent}) {
      const PeriodicityReport r = BayesPeriodicity(bg, t, TiePolicy::kFirstIndex);
      bool any = false;
      for (const auto& a : r.actions) any = any || a.verdict != Verdict::kNonPeriodic;
      ASSERT_TRUE(any);
    }
  }
}

}  // namespace
}  // namespace periodica
