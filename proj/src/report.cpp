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

#include "periodica/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "periodica/bayes.hpp"
#include "periodica/coco.hpp"
#include "periodica/epistemic.hpp"
#include "periodica/mixedper.hpp"
#include "periodica/solutions.hpp"

namespace periodica {
namespace {

class Labeler {
 public:
  explicit Labeler(const Game& game) : game_(game) {
    std::set<std::string> seen;
    std::size_t total = 0;
    for (const auto& a : game.actions()) {
      seen.insert(a.begin(), a.end());
      total += a.size();
    }
    unique_ = seen.size() == total;
  }
  std::string operator()(const Node& n) const {
    const std::string& a = game_.action_label(n.player, n.action);
    return unique_ ? a : game_.player_label(n.player) + ":" + a;
  }
  Json Nodes(const std::vector<Node>& nodes) const {
    Json out = Json::array();
    for (const Node& n : nodes) out.push_back((*this)(n));
    return out;
  }
  Json ProfileJson(const Profile& p) const {
    Json out = Json::array();
    for (std::size_t i = 0; i < p.size(); ++i) out.push_back(game_.action_label(i, p[i]));
    return out;
  }

 private:
  const Game& game_;
  bool unique_ = true;
};

Json Affine(const AffineForm& f) {
  return {{"slope", RationalToJson(f.slope)}, {"intercept", RationalToJson(f.intercept)}};
}

Json OptionalRational(const std::optional<Rational>& r) {
  return r ? Json(RationalToJson(*r)) : Json(nullptr);
}

Json ActionSetsJson(const Game& game, const ActionSets& sets) {
  Json out = Json::object();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    Json list = Json::array();
    for (std::size_t a : sets[i]) list.push_back(game.action_label(i, a));
    out[game.player_label(i)] = list;
  }
  return out;
}

Json WitnessesJson(const Game& game, const std::vector<DegeneracyWitness>& ws) {
  Labeler label(game);
  Json out = Json::array();
  for (const auto& w : ws) {
    Json tied = Json::array();
    for (const Profile& p : w.tied) tied.push_back(label.ProfileJson(p));
    out.push_back({{"player", game.player_label(w.player)},
                   {"given", game.action_label(w.player, w.own_action)},
                   {"value", RationalToJson(w.value)},
                   {"tied", tied}});
  }
  return out;
}

bool ScalarRational(const Json& v, Rational& out) {
  if (!v.is_string() && !v.is_number_integer()) return false;
  try {
    out = RationalFromJson(v, "");
    return true;
  } catch (const Error&) {
    return false;
  }
}

void Skip(Json& report, const std::string& section, const std::string& why) {
  report["skipped"][section] = why;
}

void AddMixedSections(const Game& game, Json& report) {
  std::optional<MixedNash2x2> nash;
  try {
    nash = SolveMixedNash2x2(game);
    report["mixed_nash"] = {{"p", RationalToJson(nash->p)},
                            {"q", RationalToJson(nash->q)},
                            {"payoff_a", RationalToJson(nash->payoff_a)},
                            {"payoff_b", RationalToJson(nash->payoff_b)},
                            {"interior", nash->interior},
                            {"closed_form", nash->closed_form}};
  } catch (const Error& e) {
    Skip(report, "mixed_nash", e.what());
  }
  std::optional<MixedPeriodicResult> per;
  try {
    per = SolveMixedPeriodic2x2(game);
    auto side = [](PeriodicMode mode, const Rational& alpha, const Rational& beta) {
      return Json{{"mode", PeriodicModeName(mode)},
                  {"derivative", {{"slope", RationalToJson(alpha)}, {"intercept", RationalToJson(beta)}}}};
    };
    report["mixed_periodic"] = {{"p_p", OptionalRational(per->p_p)},
                                {"q_p", OptionalRational(per->q_p)},
                                {"a", side(per->mode_a, per->alpha_a, per->beta_a)},
                                {"b", side(per->mode_b, per->alpha_b, per->beta_b)},
                                {"payoff_a", OptionalRational(per->payoff_a)},
                                {"payoff_b", OptionalRational(per->payoff_b)},
                                {"robust_a", per->robust_a},
                                {"robust_b", per->robust_b}};
  } catch (const Error& e) {
    Skip(report, "mixed_periodic", e.what());
  }
  if (nash && per) {
    const GameClass2x2 c = Classify2x2(game, *nash, *per);
    report["classification"] = {{"label", GameClassName(c.label)},
                                {"type1_identities", c.type1_identities},
                                {"type2_identities", c.type2_identities},
                                {"collective_conditions", c.collective_conditions},
                                {"type1_relations", c.type1_relations},
                                {"type2_relations", c.type2_relations}};
    const PayoffComparison cmp = ComparePayoffs2x2(game, *nash, *per);
    auto player = [](const PlayerComparison& p) {
      return Json{{"nash_payoff", RationalToJson(p.nash_payoff)},
                  {"periodic_payoff", OptionalRational(p.periodic_payoff)},
                  {"sign", p.sign},
                  {"nash_line", Affine(p.nash_line)},
                  {"periodic_line", p.periodic_line ? Affine(*p.periodic_line) : Json(nullptr)}};
    };
    report["payoff_comparison"] = {{"a", player(cmp.a)}, {"b", player(cmp.b)}};
  } else {
    Skip(report, "classification", "needs both mixed sections");
  }
  try {
    const CocoSolution s = SolveCoco(game);
    Labeler label(game);
    Json zs = {{"value", RationalToJson(s.zero_sum.value)},
               {"maximin", RationalToJson(s.zero_sum.maximin)},
               {"minimax", RationalToJson(s.zero_sum.minimax)},
               {"saddle", s.zero_sum.saddle},
               {"saddle_profile",
                s.zero_sum.saddle_profile ? label.ProfileJson(*s.zero_sum.saddle_profile) : Json(nullptr)},
               {"p", OptionalRational(s.zero_sum.p)},
               {"q", OptionalRational(s.zero_sum.q)}};
    report["coco"] = {{"team_profile", label.ProfileJson(s.team_profile)},
                      {"team_tie", s.team_tie},
                      {"v_sharp", RationalToJson(s.v_sharp)},
                      {"v_s", RationalToJson(s.v_s)},
                      {"side_payment", RationalToJson(s.side_payment)},
                      {"value_a", RationalToJson(s.value_a)},
                      {"value_b", RationalToJson(s.value_b)},
                      {"zero_sum", zs}};
  } catch (const Error& e) {
    Skip(report, "coco", e.what());
  }
}

Json SolutionJson(const QuadraticSolution& s) {
  Json out = {{"kind", SolutionKindName(s.kind)},
              {"point", {s.point.first, s.point.second}},
              {"foc_residuals", {s.foc_residuals[0], s.foc_residuals[1]}},
              {"d1", s.d1},
              {"d2", s.d2},
              {"class1", CurvatureName(s.class1)},
              {"class2", CurvatureName(s.class2)},
              {"in_domain", s.in_domain},
              {"warnings", s.warnings}};
  out["line"] = s.line ? Json{{"cx", s.line->cx}, {"cy", s.line->cy}, {"rhs", s.line->rhs}}
                       : Json(nullptr);
  return out;
}

}  // namespace

Json PeriodicityToJson(const Game& game, const PeriodicityReport& r) {
  Labeler label(game);
  Json actions = Json::array();
  for (const auto& a : r.actions) {
    Json e = {{"player", game.player_label(a.node.player)},
              {"action", game.action_label(a.node.player, a.node.action)},
              {"verdict", VerdictName(a.verdict)},
              {"trace", label.Nodes(a.trace)},
              {"tie_dependent", a.tie_dependent}};
    e["period"] = a.period ? Json(*a.period) : Json(nullptr);
    e["cycle_length"] = a.cycle_length ? Json(*a.cycle_length) : Json(nullptr);
    e["cycle"] = a.cycle.empty() ? Json(nullptr) : label.Nodes(a.cycle);
    if (r.method == Method::kGraph) {
      Json cycles = Json::array();
      for (const auto& c : a.cycles) cycles.push_back(label.Nodes(c));
      e["cycles"] = cycles;
      e["cycles_truncated"] = a.cycles_truncated;
    }
    actions.push_back(e);
  }
  Json sets = Json::object();
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    Json list = Json::array();
    for (std::size_t a : r.PeriodicActions(i)) list.push_back(game.action_label(i, a));
    sets[game.player_label(i)] = list;
  }
  Json out = {{"method", r.method == Method::kTwoPlayer ? "two-player" : "graph"},
              {"tie_policy", TiePolicyName(r.tie_policy)},
              {"tie_broken", r.tie_broken},
              {"actions", actions},
              {"periodic_sets", sets}};
  if (r.method == Method::kGraph) out["max_cycle_len"] = r.max_cycle_len;
  if (!r.transform.empty()) out["transform"] = r.transform;
  return out;
}

AnalysisResult AnalyzeStrategic(const Game& game, const std::string& name,
                                const AnalysisOptions& options) {
  AnalysisResult out;
  Json& report = out.report;
  report["kind"] = "strategic";
  report["game"] = GameToJson(game, name);
  report["skipped"] = Json::object();
  Labeler label(game);

  const auto witnesses = ValidateNondegenerate(game);
  report["degeneracy"] = {{"nondegenerate", witnesses.empty()},
                          {"witnesses", WitnessesJson(game, witnesses)}};

  try {
    if (game.num_players() == 2) {
      const PhiMap2p phi = BuildPhi2p(game, options.tie_policy);
      Json phi1 = Json::object(), phi2 = Json::object();
      for (std::size_t x = 0; x < phi.phi1.size(); ++x) {
        phi1[game.action_label(0, x)] = game.action_label(1, phi.phi1[x]);
      }
      for (std::size_t y = 0; y < phi.phi2.size(); ++y) {
        phi2[game.action_label(1, y)] = game.action_label(0, phi.phi2[y]);
      }
      report["phi"] = {{"phi1", phi1}, {"phi2", phi2}, {"tie_broken", phi.tie_broken}};
      const PeriodicityReport per = PeriodicSet2p(game, options.tie_policy);
      report["periodicity"] = PeriodicityToJson(game, per);

      Json checks = Json::array();
      for (const Profile& p : PureNash(game)) {
        const NashPeriodicity np = NashPeriodicityCheck(game, p, options.tie_policy);
        checks.push_back({{"profile", label.ProfileJson(p)},
                          {"conditions_hold", np.theorem_conditions},
                          {"verdict", np.theorem_conditions ? "Periodic" : "NotPeriodicViaTheorem3"},
                          {"period", np.period ? Json(*np.period) : Json(nullptr)},
                          {"scan_verdict_a", VerdictName(np.verdict_a)},
                          {"scan_verdict_b", VerdictName(np.verdict_b)}});
      }
      report["nash_periodicity"] = checks;

      Json models = Json::array();
      for (const auto& a : per.actions) {
        if (a.node.player != 0 || a.cycle.empty()) continue;
        const bool ok = RationalizablePeriodicCheck(game, a.cycle);
        Json m = {{"root", label(a.node)}, {"cycle", label.Nodes(a.cycle)}, {"rationalizable", ok}};
        if (ok) {
          const EpistemicModel model = BuildEpistemicModel(game, a.cycle);
          m["types"] = model.types.size();
          m["period"] = model.period();
          m["verified"] = VerifyEpistemicModel(game, model);
        }
        models.push_back(m);
      }
      report["epistemic"] = models;
    } else {
      const PhiMapNp phi(game, options.tie_policy);
      Json maps = Json::array();
      for (std::size_t i = 0; i < game.num_players(); ++i) {
        for (std::size_t j = 0; j < game.num_players(); ++j) {
          if (i == j) continue;
          Json table = Json::object();
          for (std::size_t x = 0; x < game.num_actions(i); ++x) {
            table[game.action_label(i, x)] = game.action_label(j, phi.phi(i, j, x));
          }
          maps.push_back({{"from", game.player_label(i)}, {"to", game.player_label(j)}, {"table", table}});
        }
      }
      report["phi"] = {{"maps", maps}, {"tie_broken", phi.tie_broken()}};
      GraphOptions g;
      g.max_cycle_len = options.max_cycle_len;
      report["periodicity"] = PeriodicityToJson(game, PeriodicGraphNp(game, options.tie_policy, g));
      Skip(report, "epistemic", "two-player games only");
    }
  } catch (const DegenerateGameError& e) {
    Skip(report, "periodicity", e.what());
    out.exit_code = 2;
  }

  Json pure = Json::array();
  for (const Profile& p : PureNash(game)) pure.push_back(label.ProfileJson(p));
  report["pure_nash"] = pure;
  report["rationalizable"] = ActionSetsJson(game, PointRationalizable(game));
  report["strict_dominance"] = ActionSetsJson(game, IteratedStrictDominance(game));

  const bool is_2x2 = game.num_players() == 2 && game.num_actions(0) == 2 && game.num_actions(1) == 2;
  if (is_2x2) {
    AddMixedSections(game, report);
  } else {
    for (const char* s : {"mixed_nash", "mixed_periodic", "classification", "coco"}) {
      Skip(report, s, "2x2 games only");
    }
  }
  return out;
}

AnalysisResult AnalyzeBayesian(const GameFile& file, const AnalysisOptions& options) {
  const auto& bg = std::get<BayesianGame>(file.body);
  AnalysisResult out;
  Json& report = out.report;
  report["kind"] = "bayesian";
  report["game"] = {{"name", file.name},
                    {"players", bg.players()},
                    {"actions", bg.actions()},
                    {"states", bg.states()},
                    {"types", bg.types()},
                    {"common_prior", bg.has_common_prior()}};
  report["skipped"] = Json::object();
  report["transforms"] = Json::object();
  for (Transform t : {Transform::kExAnte, Transform::kInterimCorrelated,
                      Transform::kInterimIndependent}) {
    const std::string tname = TransformName(t);
    try {
      const Game g = ApplyTransform(bg, t);
      Json section;
      section["game"] = GameToJson(g);
      Json mismatches = Json::array();
      if (auto it = file.printed.find(tname); it != file.printed.end()) {
        Labeler label(g);
        for (const auto& m : DiffPayoffs(it->second, g)) {
          mismatches.push_back({{"profile", label.ProfileJson(m.profile)},
                                {"player", g.player_label(m.player)},
                                {"printed", RationalToJson(m.expected)},
                                {"derived", RationalToJson(m.actual)}});
        }
        section["printed_checked"] = true;
      } else {
        section["printed_checked"] = false;
      }
      section["printed_mismatches"] = mismatches;
      AnalysisResult sub = AnalyzeStrategic(g, "", options);
      if (sub.report.contains("periodicity")) sub.report["periodicity"]["transform"] = tname;
      section["analysis"] = sub.report;
      out.exit_code = std::max(out.exit_code, sub.exit_code);
      report["transforms"][tname] = section;
    } catch (const DegenerateGameError& e) {
      Skip(report, tname, e.what());
      out.exit_code = std::max(out.exit_code, 2);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNoCommonPrior) throw;
      Skip(report, tname, e.what());
    }
  }
  return out;
}

AnalysisResult AnalyzeQuadratic(const QuadraticInput& input) {
  AnalysisResult out;
  Json& report = out.report;
  report["kind"] = "quadratic";
  report["skipped"] = Json::object();
  report["game"] = {{"a", input.game.a}, {"b", input.game.b}, {"preset", input.preset},
                    {"params", input.params}, {"warnings", input.game.Warnings()}};
  try {
    report["nash"] = SolutionJson(SolveNashQuadratic(input.game));
  } catch (const Error& e) {
    Skip(report, "nash", e.what());
  }
  try {
    report["periodic"] = SolutionJson(SolvePeriodicQuadratic(input.game));
  } catch (const Error& e) {
    Skip(report, "periodic", e.what());
  }
  if (input.preset == "public-good") {
    const auto& p = input.params;
    const PublicGoodReport pg = PresetPublicGood(p.at("A"), p.at("B"), p.at("C"));
    report["public_good"] = {{"nash_total", pg.nash_total},
                             {"periodic_total", pg.periodic_total},
                             {"u1_nash_intercept", pg.u1_nash_intercept},
                             {"u1_periodic_intercept", pg.u1_periodic_intercept},
                             {"u1_slope", pg.u1_slope},
                             {"gap", pg.gap}};
  } else if (input.preset == "cournot") {
    const auto& p = input.params;
    const double den = 3 * p.at("A") - 2 * p.at("M");
    report["cournot"] = {{"nash_closed_form", den != 0 ? Json((p.at("P") - p.at("B")) / den) : Json(nullptr)}};
  }
  return out;
}

AnalysisResult AnalyzeFile(const GameFile& file, const AnalysisOptions& options) {
  AnalysisResult out;
  if (file.kind == "strategic") {
    out = AnalyzeStrategic(std::get<Game>(file.body), file.name, options);
  } else if (file.kind == "bayesian") {
    out = AnalyzeBayesian(file, options);
  } else {
    out = AnalyzeQuadratic(std::get<QuadraticInput>(file.body));
  }
  out.report["format_version"] = kFormatVersion;
  out.report["errata"] = ResolveErrata(out.report, file.errata);
  return out;
}

AnalysisResult TransformFile(const GameFile& file, Transform transform, bool then_analyze,
                             const AnalysisOptions& options) {
  if (file.kind != "bayesian") {
    throw Error(ErrorCode::kInvalidArgument, "cli", "transform needs a bayesian file");
  }
  const auto& bg = std::get<BayesianGame>(file.body);
  const Game g = ApplyTransform(bg, transform);
  const std::string name =
      (file.name.empty() ? std::string("game") : file.name) + " (" + TransformName(transform) + ")";
  Json doc = GameToJson(g, name);
  if (auto it = file.printed.find(TransformName(transform)); it != file.printed.end()) {
    Json errata = Json::array();
    for (const auto& m : DiffPayoffs(it->second, g)) {
      std::string path = "/payoffs";
      for (std::size_t a : m.profile) path += "/" + std::to_string(a);
      path += "/" + std::to_string(m.player);
      errata.push_back({{"path", path},
                        {"printed", RationalToJson(m.expected)},
                        {"derived", RationalToJson(m.actual)},
                        {"agrees", false},
                        {"note", "printed table differs from the value recomputed from the state payoffs"}});
    }
    if (!errata.empty()) doc["errata"] = errata;
  }
  AnalysisResult out;
  if (!then_analyze) {
    out.report = doc;
    return out;
  }
  AnalysisResult sub = AnalyzeStrategic(g, name, options);
  if (sub.report.contains("periodicity")) sub.report["periodicity"]["transform"] = TransformName(transform);
  sub.report["format_version"] = kFormatVersion;
  sub.report["errata"] = ResolveErrata(sub.report, file.errata);
  out.report = {{"game", doc}, {"analysis", sub.report}};
  out.exit_code = sub.exit_code;
  return out;
}

Json ResolveErrata(const Json& report, const Json& errata) {
  Json out = Json::array();
  for (const Json& e : errata) {
    Json r = e;
    if (e.contains("path")) {
      Json derived;
      try {
        derived = report.at(Json::json_pointer(e["path"].get<std::string>()));
      } catch (const std::exception&) {
        derived = nullptr;
      }
      Rational pr, dr;
      bool agrees = ScalarRational(e["printed"], pr) && ScalarRational(derived, dr)
                        ? pr == dr
                        : e["printed"] == derived;
      r["derived"] = derived;
      r["agrees"] = agrees;
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace periodica
