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

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "periodica/cli.hpp"
#include "periodica/io.hpp"
#include "periodica/random_games.hpp"
#include "periodica/report.hpp"
#include "testing.hpp"

namespace periodica {
namespace {

using testing::ErrorCodeOf;
using testing::Q;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "periodica");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string TempFile(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("periodica_cli_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

const char* kTestGame = R"({"format_version": "1", "kind": "strategic",
  "actions": [["a1", "a2"], ["b1", "b2"]],
  "payoffs": [[[2, 5], [50, 6]], [[3, 10], [2, 5]]]})";

TEST(ParseGameFile, StrategicFile) {
  const GameFile f = ParseGameFile(kTestGame);
  EXPECT_EQ(f.kind, "strategic");
  const Game& g = std::get<Game>(f.body);
  EXPECT_EQ(g.raw_payoffs(), testing::TestGame().raw_payoffs());
  EXPECT_EQ(g.players(), (std::vector<std::string>{"P1", "P2"}));
  EXPECT_EQ(g.payoff({0, 1}, 0), Rational(50));
}

TEST(ParseGameFile, RationalsAreExact) {
  const GameFile f = ParseGameFile(R"({"format_version": "1", "kind": "strategic",
    "actions": [["x"], ["y"]], "payoffs": [[[0.1, "-2/6"]]]})");
  const Game& g = std::get<Game>(f.body);
  EXPECT_EQ(g.payoff({0, 0}, 0), Q("1/10"));
  EXPECT_EQ(g.payoff({0, 0}, 1), Q("-1/3"));
}

TEST(ParseGameFile, Errors) {
  auto code = [](const std::string& text) { return ErrorCodeOf([&] { ParseGameFile(text); }); };
  EXPECT_EQ(code(R"({"format_version": "1", "kind": "strategic", "actions": [["x"], ["y"]],
                     "payoffs": [[[1, 2, 3]]]})"),
            ErrorCode::kDimensionMismatch);
  EXPECT_EQ(code(R"({"format_version": "1", "kind": "strategic", "actions": [["x"], ["y"]]})"),
            ErrorCode::kSchemaError);
  EXPECT_EQ(code(R"({"format_version": "1", "kind": "strategic", "actions": [["x"], ["y"]],
                     "payoffs": [[[1, 2]]], "colour": 3})"),
            ErrorCode::kSchemaError);
  EXPECT_EQ(code(R"({"format_version": "2", "kind": "strategic"})"), ErrorCode::kSchemaError);
  EXPECT_EQ(code(R"({"format_version": "1", "format_version": "1"})"), ErrorCode::kSchemaError);
  EXPECT_EQ(code(R"({"format_version": "1", "kind": "strategic", "actions": [["x"], ["y"]],
                     "payoffs": [[["one", 2]]]})"),
            ErrorCode::kSchemaError);
  EXPECT_EQ(code(R"({"format_version": "1", "kind": "strategic", "actions": [["x"], ["y"]],
                     "payoffs": [[[1, 2]]], "errata": [{"note": "n", "path": "/a"}]})"),
            ErrorCode::kSchemaError);
}

TEST(ParseGameFile, ParseErrorCarriesLineAndColumn) {
  try {
    ParseGameFile("{\n  \"format_version\": \"1\",\n  \"kind\": ]\n}");
    FAIL() << "expected ParseError";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("column"), std::string::npos) << e.what();
  }
}

TEST(ParseGameFile, BayesianPriorMustSumToOne) {
  const std::string text = R"({"format_version": "1", "kind": "bayesian",
    "players": ["1", "2"], "actions": [["U", "D"], ["L", "R"]],
    "states": ["s", "r"], "types": [["t"], ["u"]],
    "prior": [{"state": "s", "types": ["t", "u"], "prob": "1/2"},
              {"state": "r", "types": ["t", "u"], "prob": "49/100"}],
    "payoffs": {"s": [[[1, 0], [0, 1]], [[0, 1], [1, 0]]], "r": [[[1, 0], [0, 1]], [[0, 1], [1, 0]]]}})";
  EXPECT_EQ(ErrorCodeOf([&] { ParseGameFile(text); }), ErrorCode::kInvalidPrior);
  std::string both = text;
  both.insert(both.rfind('}'), R"(, "beliefs": [])");
  EXPECT_EQ(ErrorCodeOf([&] { ParseGameFile(both); }), ErrorCode::kSchemaError);
}

TEST(ParseGameFile, QuadraticPresetParameters) {
  EXPECT_EQ(ErrorCodeOf([] {
              ParseGameFile(R"({"format_version": "1", "kind": "quadratic", "preset": "cournot",
                               "params": {"P": 10, "A": 1, "B": 1}})");
            }),
            ErrorCode::kSchemaError);
  const GameFile f = LoadGameFile(testing::FixturePath("cournot.json"));
  EXPECT_EQ(std::get<QuadraticInput>(f.body).preset, "cournot");
}

// Emitted strategic files re-parse to an equal game.
TEST(GameToJson, RoundTrip) {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<std::size_t> size(1, 4);
  for (int k = 0; k < 200; ++k) {
    const auto shape = k % 2 ? std::vector<std::size_t>{size(rng), size(rng), size(rng)}
                             : std::vector<std::size_t>{size(rng), size(rng)};
    const Game g = testing::RandomRationalGame(rng, shape);
    const Game back = std::get<Game>(ParseGameFile(GameToJson(g, "r").dump()).body);
    ASSERT_TRUE(back == g);
  }
}

TEST(Report, MachineFormRoundTripsAndIsDeterministic) {
  for (const char* name : {"testgame.json", "game1a.json", "bayes_exante.json", "three_player.json"}) {
    const GameFile f = LoadGameFile(testing::FixturePath(name));
    AnalysisOptions o;
    o.tie_policy = TiePolicy::kFirstIndex;
    const Json a = AnalyzeFile(f, o).report;
    const Json b = AnalyzeFile(LoadGameFile(testing::FixturePath(name)), o).report;
    EXPECT_EQ(a.dump(), b.dump()) << name;
    EXPECT_EQ(Json::parse(a.dump()), a) << name;
  }
  const std::string path = testing::FixturePath("testgame.json");
  EXPECT_EQ(Cli({"analyze", path, "--format", "json"}).out, Cli({"analyze", path, "--format", "json"}).out);
}

TEST(Report, RationalsAreMachineStrings) {
  const Json r = AnalyzeFile(LoadGameFile(testing::FixturePath("testgame.json")), {}).report;
  EXPECT_EQ(r["mixed_nash"]["p"], "5/6");
  EXPECT_EQ(r["mixed_periodic"]["payoff_a"], "146/49");
  EXPECT_EQ(r["coco"]["side_payment"], "-47/2");
  EXPECT_EQ(r["classification"]["label"], "Type2");
}

TEST(Report, ErrataResolveToDerivedValues) {
  const Json r = AnalyzeFile(LoadGameFile(testing::FixturePath("collective2.json")), {}).report;
  ASSERT_EQ(r["errata"].size(), 3u);
  EXPECT_EQ(r["errata"][0]["derived"], "3/2");
  EXPECT_EQ(r["errata"][0]["agrees"], false);
  EXPECT_FALSE(r["errata"][2].contains("derived"));
  const Json bos = AnalyzeFile(LoadGameFile(testing::FixturePath("bos.json")), {}).report;
  EXPECT_EQ(bos["errata"][0]["derived"], "3/2");
  const Json pd = AnalyzeFile(LoadGameFile(testing::FixturePath("pd.json")), {}).report;
  EXPECT_EQ(pd["errata"][0]["derived"], 1);
  EXPECT_EQ(ResolveErrata(Json::object(), Json::array({{{"note", "x"}, {"path", "/missing"}, {"printed", 1}}}))[0]
                ["derived"],
            nullptr);
}

TEST(Report, NonSquareGamesSkipTwoByTwoSections) {
  const Json r = AnalyzeFile(LoadGameFile(testing::FixturePath("one_by_one.json")), {}).report;
  EXPECT_FALSE(r.contains("mixed_nash"));
  EXPECT_TRUE(r["skipped"].contains("coco"));
  EXPECT_EQ(r["periodicity"]["actions"][0]["period"], 1);
}

TEST(Cli, ExitCodes) {
  const std::string game1a = testing::FixturePath("game1a.json");
  const CliRun strict = Cli({"analyze", game1a});
  EXPECT_EQ(strict.code, 2);
  EXPECT_NE(strict.out.find("Degeneracy"), std::string::npos);
  EXPECT_EQ(Cli({"analyze", game1a, "--tie-policy", "first-index"}).code, 0);
  const CliRun missing = Cli({"analyze", "/nonexistent/file.json"});
  EXPECT_EQ(missing.code, 1);
  EXPECT_NE(missing.err.find("[cli]"), std::string::npos);
  EXPECT_EQ(Cli({"analyze", game1a, "--tie-policy", "random"}).code, 1);
  EXPECT_EQ(Cli({}).code, 1);
  const std::string bad = TempFile("dim.json", R"({"format_version": "1", "kind": "strategic",
    "actions": [["x"], ["y"]], "payoffs": [[[1, 2, 3]]]})");
  const CliRun dim = Cli({"analyze", bad});
  EXPECT_EQ(dim.code, 1);
  EXPECT_NE(dim.err.find("DimensionMismatch"), std::string::npos);
}

TEST(Cli, TransformEmitsParsableGame) {
  const CliRun t = Cli({"transform", testing::FixturePath("bayes_interim_correlated.json"), "--transform",
                        "interim-correlated", "--format", "json"});
  ASSERT_EQ(t.code, 0) << t.err;
  const Json doc = Json::parse(t.out);
  const Game g = std::get<Game>(ParseGameFile(doc.dump()).body);
  EXPECT_EQ(g.payoff({0, 0}, 0), Q("-9/2"));
  const CliRun chain = Cli({"transform", testing::FixturePath("bayes_exante.json"), "--transform", "ex-ante",
                            "--then-analyze", "--tie-policy", "first-index", "--format", "json"});
  ASSERT_EQ(chain.code, 0) << chain.err;
  EXPECT_EQ(Json::parse(chain.out)["analysis"]["periodicity"]["transform"], "ex-ante");
  EXPECT_EQ(Cli({"transform", testing::FixturePath("testgame.json"), "--transform", "ex-ante"}).code, 1);
}

TEST(Cli, QuadPresets) {
  const CliRun c = Cli({"quad", "--preset", "cournot", "--params", "P=10,A=1,B=1,M=0", "--format", "json"});
  ASSERT_EQ(c.code, 0) << c.err;
  const Json r = Json::parse(c.out);
  EXPECT_DOUBLE_EQ(r["nash"]["point"][0].get<double>(), 3.0);
  const CliRun p = Cli({"quad", "--preset", "public-good", "--params", "A=4,B=1,C=2"});
  EXPECT_EQ(p.code, 0);
  EXPECT_NE(p.out.find("gap"), std::string::npos);
  EXPECT_EQ(Cli({"quad", "--preset", "public-good", "--params", "A=4,B=0,C=2"}).code, 1);
  EXPECT_EQ(Cli({"quad", "--preset", "cournot", "--params", "P=10"}).code, 1);
}

TEST(Cli, SelftestPassesOnFixtures) {
  SelftestOptions o;
  o.fixture_dir = PERIODICA_FIXTURE_DIR;
  o.random_games = 50;
  std::ostringstream out, err;
  EXPECT_EQ(RunSelftest(o, out, err), 0) << out.str() << err.str();
}

}  // namespace
}  // namespace periodica
