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

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "periodica/report.hpp"

namespace periodica {
namespace {

using Rows = std::vector<std::vector<std::string>>;

std::string Show(const Json& v);

std::string Affine(const Json& l) {
  if (l.is_null()) return "-";
  std::string c = Show(l["intercept"]);
  if (!c.empty() && c[0] == '-') return Show(l["slope"]) + " * t - " + c.substr(1);
  return Show(l["slope"]) + " * t + " + c;
}

std::string Show(const Json& v) {
  if (v.is_null()) return "-";
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    try {
      if (s.find('/') != std::string::npos) return Rational::Parse(s).ToDisplay();
    } catch (const Error&) {
    }
    return s;
  }
  if (v.is_array()) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + Show(v[k]);
    return out;
  }
  if (v.is_number_float()) {
    std::ostringstream os;
    os.precision(10);
    os << v.get<double>();
    return os.str();
  }
  return v.dump();
}

std::string Chain(const Json& nodes) {
  if (!nodes.is_array()) return "-";
  std::string out;
  for (std::size_t k = 0; k < nodes.size(); ++k) out += (k ? " -> " : "") + nodes[k].get<std::string>();
  return out;
}

void Table(std::ostream& os, const Rows& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    if (width.size() < r.size()) width.resize(r.size(), 0);
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  for (const auto& r : rows) {
    std::string line = "  ";
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    os << line << "\n";
  }
}

void Heading(std::ostream& os, const std::string& title) { os << "\n" << title << "\n"; }

void Flatten(const Json& t, const Json& actions, std::size_t depth, std::vector<std::string>& prefix,
             Rows& rows) {
  if (depth == actions.size()) {
    std::vector<std::string> r = prefix;
    r.push_back("(" + Show(t) + ")");
    rows.push_back(r);
    return;
  }
  for (std::size_t k = 0; k < t.size(); ++k) {
    prefix.push_back(actions[depth][k].get<std::string>());
    Flatten(t[k], actions, depth + 1, prefix, rows);
    prefix.pop_back();
  }
}

void PayoffTable(std::ostream& os, const Json& file) {
  const Json& actions = file["actions"];
  const Json& payoffs = file["payoffs"];
  Rows rows;
  if (actions.size() == 2) {
    std::vector<std::string> head{""};
    for (const auto& b : actions[1]) head.push_back(b.get<std::string>());
    rows.push_back(head);
    for (std::size_t i = 0; i < actions[0].size(); ++i) {
      std::vector<std::string> r{actions[0][i].get<std::string>()};
      for (std::size_t j = 0; j < actions[1].size(); ++j) r.push_back(Show(payoffs[i][j]));
      rows.push_back(r);
    }
  } else {
    std::vector<std::string> prefix;
    Flatten(payoffs, actions, 0, prefix, rows);
  }
  os << "players: " << Show(file["players"]) << "\n";
  Table(os, rows);
}

void Sets(std::ostream& os, const std::string& title, const Json& sets) {
  Heading(os, title);
  Rows rows;
  for (auto it = sets.begin(); it != sets.end(); ++it) rows.push_back({it.key(), "{" + Show(it.value()) + "}"});
  if (rows.empty()) os << "  none\n";
  Table(os, rows);
}

void Errata(std::ostream& os, const Json& report) {
  if (!report.contains("errata") || report["errata"].empty()) return;
  Heading(os, "Errata");
  for (const Json& e : report["errata"]) {
    os << "  - " << e["note"].get<std::string>() << "\n";
    if (e.contains("path")) {
      os << "    " << e["path"].get<std::string>() << ": printed " << Show(e["printed"]) << ", derived "
         << (e["derived"].is_null() ? std::string("none") : Show(e["derived"])) << (e["agrees"].get<bool>() ? " (agrees)" : " (differs)") << "\n";
    }
  }
}

void Skipped(std::ostream& os, const Json& report) {
  if (!report.contains("skipped") || report["skipped"].empty()) return;
  Heading(os, "Skipped");
  for (auto it = report["skipped"].begin(); it != report["skipped"].end(); ++it) {
    os << "  " << it.key() << ": " << it.value().get<std::string>() << "\n";
  }
}

void Strategic(std::ostream& os, const Json& r) {
  const Json& g = r["game"];
  os << "Game" << (g.contains("name") ? ": " + g["name"].get<std::string>() : std::string()) << "\n";
  PayoffTable(os, g);

  Heading(os, "Degeneracy");
  if (r["degeneracy"]["nondegenerate"].get<bool>()) {
    os << "  none (every argmax is unique)\n";
  } else {
    for (const Json& w : r["degeneracy"]["witnesses"]) {
      std::string tied;
      for (const Json& p : w["tied"]) tied += " (" + Show(p) + ")";
      os << "  U_" << w["player"].get<std::string>() << " given " << w["given"].get<std::string>()
         << ": value " << Show(w["value"]) << " at" << tied << "\n";
    }
  }

  if (r.contains("phi")) {
    Heading(os, "Phi maps" + std::string(r["phi"]["tie_broken"].get<bool>() ? " (ties broken by first index)" : ""));
    Rows rows;
    if (r["phi"].contains("phi1")) {
      for (const char* k : {"phi1", "phi2"}) {
        const Json& m = r["phi"][k];
        for (auto it = m.begin(); it != m.end(); ++it) rows.push_back({k, it.key() + " -> " + it.value().get<std::string>()});
      }
    } else {
      for (const Json& m : r["phi"]["maps"]) {
        std::string label = "phi_" + m["from"].get<std::string>() + m["to"].get<std::string>();
        for (auto it = m["table"].begin(); it != m["table"].end(); ++it) {
          rows.push_back({label, it.key() + " -> " + it.value().get<std::string>()});
        }
      }
    }
    Table(os, rows);
  }

  if (r.contains("periodicity")) {
    const Json& p = r["periodicity"];
    Heading(os, "Periodicity (" + p["method"].get<std::string>() + ", tie policy " +
                    p["tie_policy"].get<std::string>() +
                    (p.contains("transform") ? ", " + p["transform"].get<std::string>() : std::string()) + ")");
    Rows rows{{"player", "action", "verdict", "n", "cycle / trace"}};
    for (const Json& a : p["actions"]) {
      const bool periodic = !a["cycle"].is_null();
      rows.push_back({a["player"].get<std::string>(), a["action"].get<std::string>(),
                      a["verdict"].get<std::string>() + (a["tie_dependent"].get<bool>() ? "*" : ""),
                      Show(a["period"]), periodic ? Chain(a["cycle"]) : Chain(a["trace"])});
    }
    Table(os, rows);
    if (p["tie_broken"].get<bool>()) os << "  * passes through a tie-broken argmax\n";
    for (const Json& a : p["actions"]) {
      if (!a.contains("cycles") || a["cycles"].size() < 2) continue;
      os << "  cycles through " << a["action"].get<std::string>() << ":";
      for (const Json& c : a["cycles"]) os << " [" << Chain(c) << "]";
      os << (a["cycles_truncated"].get<bool>() ? " (truncated)" : "") << "\n";
    }
    Sets(os, "Periodic sets", p["periodic_sets"]);
  }

  Heading(os, "Pure Nash equilibria");
  if (r["pure_nash"].empty()) os << "  none\n";
  for (const Json& n : r["pure_nash"]) os << "  (" << Show(n) << ")\n";
  if (r.contains("nash_periodicity")) {
    for (const Json& c : r["nash_periodicity"]) {
      os << "  (" << Show(c["profile"]) << "): " << c["verdict"].get<std::string>()
         << (c["period"].is_null() ? "" : ", n = " + Show(c["period"])) << "; scan verdicts "
         << c["scan_verdict_a"].get<std::string>() << " / " << c["scan_verdict_b"].get<std::string>() << "\n";
    }
  }
  Sets(os, "Point-rationalizable actions", r["rationalizable"]);
  Sets(os, "Survivors of iterated strict dominance", r["strict_dominance"]);

  if (r.contains("mixed_nash")) {
    const Json& m = r["mixed_nash"];
    Heading(os, "Mixed Nash");
    Table(os, {{"p_N", Show(m["p"])}, {"q_N", Show(m["q"])}, {"payoffs", Show(m["payoff_a"]) + ", " + Show(m["payoff_b"])},
               {"interior", Show(m["interior"])}});
  }
  if (r.contains("mixed_periodic")) {
    const Json& m = r["mixed_periodic"];
    Heading(os, "Mixed periodic");
    const auto deriv = Affine;
    Table(os, {{"p_p", Show(m["p_p"])},
               {"q_p", Show(m["q_p"])},
               {"A", m["a"]["mode"].get<std::string>(), "dU_A/dq = " + deriv(m["a"]["derivative"]) + " (t = p)"},
               {"B", m["b"]["mode"].get<std::string>(), "dU_B/dp = " + deriv(m["b"]["derivative"]) + " (t = q)"},
               {"payoffs", Show(m["payoff_a"]) + ", " + Show(m["payoff_b"])},
               {"robust", Show(m["robust_a"]) + ", " + Show(m["robust_b"])}});
  }
  if (r.contains("classification")) {
    Heading(os, "Class: " + r["classification"]["label"].get<std::string>());
  }
  if (r.contains("payoff_comparison")) {
    Heading(os, "Payoff comparison");
    Rows rows{{"player", "Nash", "periodic", "Nash line", "periodic line"}};
    const auto line = Affine;
    for (const char* k : {"a", "b"}) {
      const Json& c = r["payoff_comparison"][k];
      rows.push_back({k[0] == 'a' ? "A" : "B", Show(c["nash_payoff"]), Show(c["periodic_payoff"]),
                      line(c["nash_line"]), line(c["periodic_line"])});
    }
    Table(os, rows);
  }
  if (r.contains("coco")) {
    const Json& c = r["coco"];
    Heading(os, "CoCo value");
    Table(os, {{"team profile", "(" + Show(c["team_profile"]) + ")"},
               {"V#", Show(c["v_sharp"])},
               {"V_S", Show(c["v_s"]) + (c["zero_sum"]["saddle"].get<bool>() ? " (saddle)" : " (mixed)")},
               {"values", Show(c["value_a"]) + ", " + Show(c["value_b"])},
               {"side payment", Show(c["side_payment"])}});
  }
  if (r.contains("epistemic")) {
    Heading(os, "Epistemic models");
    for (const Json& m : r["epistemic"]) {
      os << "  " << Chain(m["cycle"]) << ": "
         << (m["rationalizable"].get<bool>() ? std::to_string(m["types"].get<std::size_t>()) + " types" : "not rationalizable")
         << "\n";
    }
  }
}

void Bayesian(std::ostream& os, const Json& r) {
  os << "Bayesian game" << (r["game"]["name"].get<std::string>().empty() ? "" : ": " + r["game"]["name"].get<std::string>())
     << "\n";
  for (auto it = r["transforms"].begin(); it != r["transforms"].end(); ++it) {
    os << "\n==== " << it.key() << " ====\n";
    const Json& t = it.value();
    if (t["printed_checked"].get<bool>()) {
      if (t["printed_mismatches"].empty()) {
        os << "printed table reproduced cellwise\n";
      } else {
        os << "printed table differs in " << t["printed_mismatches"].size() << " cell(s):\n";
        for (const Json& m : t["printed_mismatches"]) {
          os << "  (" << Show(m["profile"]) << ") " << m["player"].get<std::string>() << ": printed "
             << Show(m["printed"]) << ", derived " << Show(m["derived"]) << "\n";
        }
      }
    }
    Strategic(os, t["analysis"]);
    Skipped(os, t["analysis"]);
  }
}

void Quadratic(std::ostream& os, const Json& r) {
  const Json& g = r["game"];
  os << "Quadratic game" << (g["preset"].get<std::string>().empty() ? "" : " (" + g["preset"].get<std::string>() + ")")
     << "\n";
  Table(os, {{"a", Show(g["a"])}, {"b", Show(g["b"])}});
  for (const char* k : {"nash", "periodic"}) {
    if (!r.contains(k)) continue;
    const Json& s = r[k];
    Heading(os, s["kind"].get<std::string>());
    Rows rows;
    if (!s["line"].is_null()) {
      rows.push_back({"line", Show(s["line"]["cx"]) + " x + " + Show(s["line"]["cy"]) + " y = " + Show(s["line"]["rhs"])});
    }
    rows.push_back({"point", "(" + Show(s["point"]) + ")"});
    rows.push_back({"FOC residuals", Show(s["foc_residuals"])});
    rows.push_back({"D1, D2", Show(s["d1"]) + ", " + Show(s["d2"])});
    rows.push_back({"curvature", s["class1"].get<std::string>() + ", " + s["class2"].get<std::string>()});
    Table(os, rows);
    for (const Json& w : s["warnings"]) os << "  warning: " << w.get<std::string>() << "\n";
  }
  if (r.contains("public_good")) {
    const Json& p = r["public_good"];
    Heading(os, "Public good");
    Table(os, {{"x* + y*", Show(p["nash_total"])},
               {"x_p + y_p", Show(p["periodic_total"])},
               {"u1(x*, y)", Show(p["u1_nash_intercept"]) + " + " + Show(p["u1_slope"]) + " y"},
               {"u1(x_p, y)", Show(p["u1_periodic_intercept"]) + " + " + Show(p["u1_slope"]) + " y"},
               {"gap", Show(p["gap"])}});
  }
}

}  // namespace

std::string RenderText(const Json& report) {
  std::ostringstream os;
  if (report.contains("payoffs")) {
    os << "Game" << (report.contains("name") ? ": " + report["name"].get<std::string>() : std::string()) << "\n";
    PayoffTable(os, report);
    if (report.contains("errata")) {
      Heading(os, "Printed-table mismatches");
      for (const Json& e : report["errata"]) {
        os << "  " << e["path"].get<std::string>() << ": printed " << Show(e["printed"]) << ", derived "
           << Show(e["derived"]) << "\n";
      }
    }
    return os.str();
  }
  if (report.contains("analysis")) {
    return RenderText(report["game"]) + "\n" + RenderText(report["analysis"]);
  }
  const std::string kind = report.value("kind", "");
  if (kind == "strategic") {
    Strategic(os, report);
  } else if (kind == "bayesian") {
    Bayesian(os, report);
  } else if (kind == "quadratic") {
    Quadratic(os, report);
  }
  Errata(os, report);
  Skipped(os, report);
  return os.str();
}

}  // namespace periodica
