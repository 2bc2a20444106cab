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

#include "periodica/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "periodica/random_games.hpp"
#include "periodica/report.hpp"

#ifndef PERIODICA_FIXTURE_DIR
#define PERIODICA_FIXTURE_DIR "fixtures"
#endif

namespace periodica {
namespace {

struct CommonFlags {
  std::string tie_policy = "strict";
  std::string format = "text";
  std::size_t max_cycle_len = 0;
};

void AddCommon(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--tie-policy", flags.tie_policy, "strict or first-index")
      ->check(CLI::IsMember({"strict", "first-index"}));
  cmd->add_option("--format", flags.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--max-cycle-len", flags.max_cycle_len,
                  "cycle enumeration bound for games with more than two players (0: node count)");
}

AnalysisOptions ToOptions(const CommonFlags& flags) {
  AnalysisOptions o;
  o.tie_policy = flags.tie_policy == "strict" ? TiePolicy::kStrict : TiePolicy::kFirstIndex;
  o.max_cycle_len = flags.max_cycle_len;
  return o;
}

void Emit(std::ostream& out, const Json& report, const std::string& format) {
  if (format == "json") {
    out << report.dump(2) << "\n";
  } else {
    out << RenderText(report);
  }
}

std::map<std::string, double> ParseParams(const std::string& text) {
  std::map<std::string, double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error(ErrorCode::kInvalidArgument, "cli", "expected NAME=VALUE, got '" + item + "'");
    }
    out[item.substr(0, eq)] = Rational::Parse(item.substr(eq + 1)).ToDouble();
  }
  return out;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cli", "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Periodic strategies and related solution concepts for finite games"};
  app.require_subcommand(1);

  CommonFlags analyze_flags;
  std::string analyze_path;
  auto* analyze = app.add_subcommand("analyze", "Analyze a game file");
  analyze->add_option("file", analyze_path, "game file")->required();
  AddCommon(analyze, analyze_flags);

  CommonFlags transform_flags;
  std::string transform_path, transform_kind;
  bool then_analyze = false;
  auto* transform = app.add_subcommand("transform", "Transform a Bayesian game file");
  transform->add_option("file", transform_path, "bayesian game file")->required();
  transform->add_option("--transform", transform_kind, "ex-ante, interim-correlated or interim-independent")
      ->required()
      ->check(CLI::IsMember({"ex-ante", "interim-correlated", "interim-independent"}));
  transform->add_flag("--then-analyze", then_analyze, "analyze the transformed game");
  AddCommon(transform, transform_flags);

  std::string preset, params;
  std::string quad_format = "text";
  auto* quad = app.add_subcommand("quad", "Solve a preset quadratic game");
  quad->add_option("--preset", preset, "cournot or public-good")
      ->required()
      ->check(CLI::IsMember({"cournot", "public-good"}));
  quad->add_option("--params", params, "comma-separated NAME=VALUE list, e.g. P=10,A=1,B=1,M=0")->required();
  quad->add_option("--format", quad_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  SelftestOptions self;
  self.fixture_dir = PERIODICA_FIXTURE_DIR;
  auto* selftest = app.add_subcommand("selftest", "Run the fixture snapshot suite");
  selftest->add_option("--fixtures", self.fixture_dir, "fixture directory");
  selftest->add_option("--seed", self.seed, "seed for the random sweep");
  selftest->add_option("--random-games", self.random_games, "number of random games in the sweep");
  selftest->add_flag("--update", self.update, "rewrite snapshots instead of comparing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*analyze) {
      const AnalysisResult r = AnalyzeFile(LoadGameFile(analyze_path), ToOptions(analyze_flags));
      Emit(out, r.report, analyze_flags.format);
      return r.exit_code;
    }
    if (*transform) {
      const AnalysisResult r = TransformFile(LoadGameFile(transform_path), *ParseTransform(transform_kind),
                                             then_analyze, ToOptions(transform_flags));
      Emit(out, r.report, transform_flags.format);
      return r.exit_code;
    }
    if (*quad) {
      QuadraticInput input = MakeQuadraticPreset(preset, ParseParams(params));
      AnalysisResult r = AnalyzeQuadratic(input);
      r.report["format_version"] = kFormatVersion;
      r.report["errata"] = Json::array();
      Emit(out, r.report, quad_format);
      return r.exit_code;
    }
    return RunSelftest(self, out, err);
  } catch (const DegenerateGameError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  }
}

int RunSelftest(const SelftestOptions& options, std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  const fs::path dir(options.fixture_dir);
  const Json manifest = Json::parse(ReadFile(dir / "manifest.json"));
  int failures = 0;
  for (const Json& c : manifest["cases"]) {
    const std::string name = c["name"].get<std::string>();
    AnalysisOptions opts;
    if (c.value("tie_policy", "strict") == "first-index") opts.tie_policy = TiePolicy::kFirstIndex;
    AnalysisResult r;
    try {
      const GameFile file = LoadGameFile((dir / c["file"].get<std::string>()).string());
      if (c.value("command", "analyze") == "transform") {
        r = TransformFile(file, *ParseTransform(c["transform"].get<std::string>()),
                          c.value("then_analyze", false), opts);
      } else {
        r = AnalyzeFile(file, opts);
      }
    } catch (const Error& e) {
      err << "FAIL " << name << ": " << e.what() << "\n";
      ++failures;
      continue;
    }
    Json actual = {{"exit_code", r.exit_code}, {"report", r.report}};
    const fs::path snap = dir / c["snapshot"].get<std::string>();
    if (options.update) {
      std::ofstream(snap, std::ios::binary) << actual.dump(2) << "\n";
      out << "updated " << name << "\n";
      continue;
    }
    Json expected;
    try {
      expected = Json::parse(ReadFile(snap));
    } catch (const std::exception& e) {
      err << "FAIL " << name << ": " << e.what() << "\n";
      ++failures;
      continue;
    }
    if (expected == actual) {
      out << "ok   " << name << "\n";
    } else {
      out << "FAIL " << name << ": output differs from " << snap.string() << "\n";
      ++failures;
    }
  }

  // Every random game with distinct payoffs has periodic actions, and every
  // trace ends on one.
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> size(1, 6);
  std::size_t bad = 0;
  for (std::size_t k = 0; k < options.random_games; ++k) {
    const bool three = k % 4 == 3;
    const Game g = RandomDistinctGame(rng, three ? std::vector<std::size_t>{2, 2, 2}
                                                 : std::vector<std::size_t>{size(rng), size(rng)});
    const PeriodicityReport rep = three ? PeriodicGraphNp(g, TiePolicy::kStrict)
                                        : PeriodicSet2p(g, TiePolicy::kStrict);
    bool any = false, traces = true;
    for (const auto& a : rep.actions) {
      any = any || a.verdict == Verdict::kPeriodic;
      const Node end = a.trace.back();
      traces = traces && rep.at(end.player, end.action).verdict == Verdict::kPeriodic;
    }
    if (!any || !traces) ++bad;
  }
  out << (bad == 0 ? "ok   " : "FAIL ") << "random sweep: " << options.random_games << " games, seed "
      << options.seed << ", " << bad << " violation(s)\n";
  failures += bad != 0;
  return failures == 0 ? 0 : 1;
}

}  // namespace periodica
