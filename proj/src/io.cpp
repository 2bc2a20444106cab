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

#include "periodica/io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace periodica {
namespace {

[[noreturn]] void Schema(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kSchemaError, "cli", where + ": " + what);
}

// Builds a Json tree; floating literals are stored as their source text.
class ExactBuilder {
 public:
  using number_integer_t = Json::number_integer_t;
  using number_unsigned_t = Json::number_unsigned_t;
  using number_float_t = Json::number_float_t;
  using string_t = Json::string_t;
  using binary_t = Json::binary_t;

  bool null() { return Put(nullptr); }
  bool boolean(bool v) { return Put(v); }
  bool number_integer(number_integer_t v) { return Put(v); }
  bool number_unsigned(number_unsigned_t v) { return Put(v); }
  bool number_float(number_float_t, const string_t& text) { return Put(text); }
  bool string(string_t& v) { return Put(v); }
  bool binary(binary_t&) { return false; }
  bool start_object(std::size_t) {
    stack_.push_back(Slot(Json::object()));
    keys_.emplace_back();
    return true;
  }
  bool key(string_t& k) {
    if (!keys_.back().insert(k).second) {
      duplicate_ = k;
      return false;
    }
    pending_ = k;
    return true;
  }
  bool end_object() {
    stack_.pop_back();
    keys_.pop_back();
    return true;
  }
  bool start_array(std::size_t) {
    stack_.push_back(Slot(Json::array()));
    keys_.emplace_back();
    return true;
  }
  bool end_array() {
    stack_.pop_back();
    keys_.pop_back();
    return true;
  }
  bool parse_error(std::size_t position, const std::string&,
                   const nlohmann::detail::exception& ex) {
    error_position_ = position;
    error_message_ = ex.what();
    return false;
  }

  Json root;
  std::string duplicate_;
  std::size_t error_position_ = 0;
  std::string error_message_;

 private:
  Json* Slot(Json value) {
    if (stack_.empty()) {
      root = std::move(value);
      return &root;
    }
    Json* top = stack_.back();
    if (top->is_array()) {
      top->push_back(std::move(value));
      return &top->back();
    }
    (*top)[pending_] = std::move(value);
    return &(*top)[pending_];
  }
  template <typename T>
  bool Put(T&& value) {
    Slot(Json(std::forward<T>(value)));
    return true;
  }

  std::vector<Json*> stack_;
  std::vector<std::set<std::string>> keys_;
  std::string pending_;
};

void CheckKeys(const Json& obj, const std::string& where, const std::set<std::string>& required,
               const std::set<std::string>& optional) {
  if (!obj.is_object()) Schema(where, "expected an object");
  for (const auto& k : required) {
    if (!obj.contains(k)) Schema(where, "missing field '" + k + "'");
  }
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!required.count(it.key()) && !optional.count(it.key())) {
      Schema(where, "unexpected field '" + it.key() + "'");
    }
  }
}

std::string StringField(const Json& v, const std::string& where) {
  if (!v.is_string()) Schema(where, "expected a string");
  return v.get<std::string>();
}

std::vector<std::string> StringList(const Json& v, const std::string& where) {
  if (!v.is_array()) Schema(where, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    out.push_back(StringField(v[k], where + "/" + std::to_string(k)));
  }
  return out;
}

std::vector<std::vector<std::string>> StringLists(const Json& v, const std::string& where) {
  if (!v.is_array()) Schema(where, "expected an array of arrays");
  std::vector<std::vector<std::string>> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    out.push_back(StringList(v[k], where + "/" + std::to_string(k)));
  }
  return out;
}

std::vector<std::string> DefaultPlayers(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("P" + std::to_string(i + 1));
  return out;
}

void ReadTensor(const Json& v, const std::vector<std::vector<std::string>>& actions,
                std::size_t depth, const std::string& where, std::vector<Rational>& out) {
  const std::size_t n = actions.size();
  if (!v.is_array()) Schema(where, "expected an array");
  if (depth == n) {
    if (v.size() != n) {
      throw Error(ErrorCode::kDimensionMismatch, "cli",
                  where + ": payoff vector has " + std::to_string(v.size()) + " entries, expected " +
                      std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(RationalFromJson(v[i], where + "/" + std::to_string(i)));
    }
    return;
  }
  if (v.size() != actions[depth].size()) {
    throw Error(ErrorCode::kDimensionMismatch, "cli",
                where + ": " + std::to_string(v.size()) + " entries for " +
                    std::to_string(actions[depth].size()) + " actions");
  }
  for (std::size_t k = 0; k < v.size(); ++k) {
    ReadTensor(v[k], actions, depth + 1, where + "/" + std::to_string(k), out);
  }
}

Game ReadGame(std::vector<std::string> players, std::vector<std::vector<std::string>> actions,
              const Json& payoffs, const std::string& where) {
  if (actions.size() < 2) Schema(where, "at least two players required");
  std::vector<Rational> flat;
  ReadTensor(payoffs, actions, 0, where, flat);
  if (players.empty()) players = DefaultPlayers(actions.size());
  if (players.size() != actions.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "cli", "players and actions differ in length");
  }
  return Game(std::move(players), std::move(actions), std::move(flat));
}

Json TensorToJson(const Game& game, Profile& prefix, std::size_t depth) {
  Json arr = Json::array();
  if (depth == game.num_players()) {
    for (const Rational& r : game.payoffs(prefix)) arr.push_back(RationalToJson(r));
    return arr;
  }
  for (std::size_t a = 0; a < game.num_actions(depth); ++a) {
    prefix[depth] = a;
    arr.push_back(TensorToJson(game, prefix, depth + 1));
  }
  return arr;
}

std::size_t IndexOf(const std::vector<std::string>& labels, const std::string& label,
                    const std::string& where) {
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (labels[k] == label) return k;
  }
  Schema(where, "unknown label '" + label + "'");
}

std::vector<std::size_t> TypeProfile(const Json& v, const std::vector<std::vector<std::string>>& types,
                                     const std::string& where) {
  std::vector<std::string> labels = StringList(v, where);
  if (labels.size() != types.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "cli", where + ": one type per player required");
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < labels.size(); ++i) out.push_back(IndexOf(types[i], labels[i], where));
  return out;
}

double NumberFromJson(const Json& v, const std::string& where) {
  return RationalFromJson(v, where).ToDouble();
}

GameFile ParseStrategic(const Json& doc) {
  CheckKeys(doc, "/", {"format_version", "kind", "actions", "payoffs"},
            {"name", "description", "players", "errata"});
  GameFile f;
  f.kind = "strategic";
  auto actions = StringLists(doc["actions"], "/actions");
  std::vector<std::string> players;
  if (doc.contains("players")) players = StringList(doc["players"], "/players");
  f.body = ReadGame(std::move(players), std::move(actions), doc["payoffs"], "/payoffs");
  return f;
}

GameFile ParseBayesian(const Json& doc) {
  CheckKeys(doc, "/", {"format_version", "kind", "players", "actions", "states", "types", "payoffs"},
            {"name", "description", "prior", "beliefs", "printed", "errata"});
  GameFile f;
  f.kind = "bayesian";
  auto players = StringList(doc["players"], "/players");
  auto actions = StringLists(doc["actions"], "/actions");
  auto states = StringList(doc["states"], "/states");
  auto types = StringLists(doc["types"], "/types");
  if (actions.size() != players.size() || types.size() != players.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "cli", "players, actions and types differ in length");
  }
  std::vector<std::size_t> tsizes;
  for (const auto& t : types) tsizes.push_back(t.size());
  const TypeSpace space(states.size(), tsizes);

  const Json& pay = doc["payoffs"];
  if (!pay.is_object()) Schema("/payoffs", "expected an object keyed by state");
  std::vector<Game> state_games;
  for (const auto& s : states) {
    if (!pay.contains(s)) Schema("/payoffs", "missing state '" + s + "'");
    state_games.push_back(ReadGame(players, actions, pay[s], "/payoffs/" + s));
  }
  if (pay.size() != states.size()) Schema("/payoffs", "payoffs for an undeclared state");

  if (doc.contains("prior") == doc.contains("beliefs")) {
    Schema("/", "exactly one of 'prior' and 'beliefs' is required");
  }
  std::optional<std::vector<Rational>> prior;
  std::optional<std::vector<std::vector<std::vector<Rational>>>> beliefs;
  auto read_entries = [&](const Json& list, const std::string& where) {
    if (!list.is_array()) Schema(where, "expected an array");
    std::vector<Rational> dense(space.size());
    std::vector<bool> seen(space.size(), false);
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string w = where + "/" + std::to_string(k);
      CheckKeys(list[k], w, {"state", "types", "prob"}, {});
      std::size_t s = IndexOf(states, StringField(list[k]["state"], w + "/state"), w + "/state");
      std::size_t e = space.Index(s, TypeProfile(list[k]["types"], types, w + "/types"));
      if (seen[e]) Schema(w, "duplicate entry");
      seen[e] = true;
      dense[e] = RationalFromJson(list[k]["prob"], w + "/prob");
    }
    return dense;
  };
  if (doc.contains("prior")) {
    prior = read_entries(doc["prior"], "/prior");
  } else {
    const Json& list = doc["beliefs"];
    if (!list.is_array()) Schema("/beliefs", "expected an array");
    std::vector<std::vector<std::vector<Rational>>> b(players.size());
    std::vector<std::vector<bool>> given(players.size());
    for (std::size_t i = 0; i < players.size(); ++i) {
      b[i].resize(types[i].size());
      given[i].assign(types[i].size(), false);
    }
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string w = "/beliefs/" + std::to_string(k);
      CheckKeys(list[k], w, {"player", "type", "entries"}, {});
      std::size_t i = IndexOf(players, StringField(list[k]["player"], w), w + "/player");
      std::size_t t = IndexOf(types[i], StringField(list[k]["type"], w), w + "/type");
      if (given[i][t]) Schema(w, "duplicate belief table");
      given[i][t] = true;
      b[i][t] = read_entries(list[k]["entries"], w + "/entries");
    }
    for (std::size_t i = 0; i < players.size(); ++i) {
      for (std::size_t t = 0; t < types[i].size(); ++t) {
        if (!given[i][t]) {
          throw Error(ErrorCode::kInvalidPrior, "cli", "no beliefs for type '" + types[i][t] + "'");
        }
      }
    }
    beliefs = std::move(b);
  }
  f.body = BayesianGame(players, actions, states, types, std::move(prior), std::move(beliefs),
                        std::move(state_games));

  if (doc.contains("printed")) {
    const Json& printed = doc["printed"];
    if (!printed.is_object()) Schema("/printed", "expected an object keyed by transform");
    for (auto it = printed.begin(); it != printed.end(); ++it) {
      const std::string w = "/printed/" + it.key();
      if (!ParseTransform(it.key())) Schema(w, "unknown transform");
      CheckKeys(it.value(), w, {"actions", "payoffs"}, {"players"});
      std::vector<std::string> pl;
      if (it.value().contains("players")) pl = StringList(it.value()["players"], w + "/players");
      f.printed.emplace(it.key(), ReadGame(std::move(pl), StringLists(it.value()["actions"], w + "/actions"),
                                           it.value()["payoffs"], w + "/payoffs"));
    }
  }
  return f;
}

GameFile ParseQuadratic(const Json& doc) {
  GameFile f;
  f.kind = "quadratic";
  if (doc.contains("preset")) {
    CheckKeys(doc, "/", {"format_version", "kind", "preset", "params"},
              {"name", "description", "errata"});
    const Json& p = doc["params"];
    if (!p.is_object()) Schema("/params", "expected an object");
    std::map<std::string, double> params;
    for (auto it = p.begin(); it != p.end(); ++it) {
      params[it.key()] = NumberFromJson(it.value(), "/params/" + it.key());
    }
    f.body = MakeQuadraticPreset(StringField(doc["preset"], "/preset"), params);
    return f;
  }
  CheckKeys(doc, "/", {"format_version", "kind", "a", "b"}, {"name", "description", "errata"});
  QuadraticInput q;
  for (const char* side : {"a", "b"}) {
    const Json& v = doc[side];
    const std::string w = std::string("/") + side;
    if (!v.is_array() || v.size() != 5) {
      throw Error(ErrorCode::kDimensionMismatch, "cli", w + ": expected 5 coefficients");
    }
    auto& dst = side[0] == 'a' ? q.game.a : q.game.b;
    for (std::size_t k = 0; k < 5; ++k) dst[k] = NumberFromJson(v[k], w + "/" + std::to_string(k));
  }
  q.game.Validate();
  f.body = q;
  return f;
}

}  // namespace

Json ParseJsonExact(std::string_view text) {
  ExactBuilder builder;
  const bool ok = Json::sax_parse(text.begin(), text.end(), &builder);
  if (ok) return std::move(builder.root);
  if (!builder.duplicate_.empty()) {
    throw Error(ErrorCode::kSchemaError, "cli", "duplicate key '" + builder.duplicate_ + "'");
  }
  std::size_t pos = std::min(builder.error_position_, text.size());
  std::size_t line = 1, column = 1;
  for (std::size_t k = 0; k + 1 < pos; ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  throw Error(ErrorCode::kParseError, "cli",
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                  builder.error_message_);
}

Rational RationalFromJson(const Json& value, const std::string& where) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) return Rational::Parse(std::to_string(value.get<std::uint64_t>()));
    return Rational(value.get<std::int64_t>());
  }
  if (value.is_string()) {
    try {
      return Rational::Parse(value.get<std::string>());
    } catch (const Error& e) {
      Schema(where, e.detail());
    }
  }
  Schema(where, "expected a rational (integer, decimal or \"p/q\")");
}

GameFile ParseGameFile(std::string_view text) {
  const Json doc = ParseJsonExact(text);
  if (!doc.is_object()) Schema("/", "expected an object");
  if (!doc.contains("format_version")) Schema("/", "missing field 'format_version'");
  if (doc["format_version"] != kFormatVersion) {
    Schema("/format_version", "unsupported version (expected \"1\")");
  }
  if (!doc.contains("kind")) Schema("/", "missing field 'kind'");
  const std::string kind = StringField(doc["kind"], "/kind");
  GameFile f;
  if (kind == "strategic") {
    f = ParseStrategic(doc);
  } else if (kind == "bayesian") {
    f = ParseBayesian(doc);
  } else if (kind == "quadratic") {
    f = ParseQuadratic(doc);
  } else {
    Schema("/kind", "unknown kind '" + kind + "'");
  }
  if (doc.contains("name")) f.name = StringField(doc["name"], "/name");
  if (doc.contains("errata")) {
    if (!doc["errata"].is_array()) Schema("/errata", "expected an array");
    for (std::size_t k = 0; k < doc["errata"].size(); ++k) {
      const std::string w = "/errata/" + std::to_string(k);
      CheckKeys(doc["errata"][k], w, {"note"}, {"path", "printed"});
      if (doc["errata"][k].contains("path") != doc["errata"][k].contains("printed")) {
        Schema(w, "'path' and 'printed' go together");
      }
    }
    f.errata = doc["errata"];
  }
  return f;
}

GameFile LoadGameFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cli", "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseGameFile(buf.str());
}

Json GameToJson(const Game& game, const std::string& name) {
  Json doc;
  doc["format_version"] = kFormatVersion;
  doc["kind"] = "strategic";
  if (!name.empty()) doc["name"] = name;
  doc["players"] = game.players();
  doc["actions"] = game.actions();
  Profile prefix(game.num_players(), 0);
  doc["payoffs"] = TensorToJson(game, prefix, 0);
  return doc;
}

QuadraticInput MakeQuadraticPreset(const std::string& preset,
                                   const std::map<std::string, double>& params) {
  auto need = [&](std::set<std::string> keys) {
    for (const auto& k : keys) {
      if (!params.count(k)) Schema("/params", "missing parameter '" + k + "'");
    }
    for (const auto& [k, v] : params) {
      if (!keys.count(k)) Schema("/params", "unexpected parameter '" + k + "'");
    }
  };
  QuadraticInput q;
  q.preset = preset;
  q.params = params;
  if (preset == "cournot") {
    need({"P", "A", "B", "M"});
    q.game = PresetCournot(params.at("P"), params.at("A"), params.at("B"), params.at("M"));
  } else if (preset == "public-good") {
    need({"A", "B", "C"});
    q.game = PresetPublicGood(params.at("A"), params.at("B"), params.at("C")).game;
  } else {
    Schema("/preset", "unknown preset '" + preset + "'");
  }
  return q;
}

}  // namespace periodica
