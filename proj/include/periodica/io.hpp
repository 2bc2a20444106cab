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

#ifndef PERIODICA_IO_HPP_
#define PERIODICA_IO_HPP_

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "periodica/bayes.hpp"
#include "periodica/game.hpp"
#include "periodica/quadratic.hpp"

namespace periodica {

using Json = nlohmann::json;

inline constexpr const char* kFormatVersion = "1";

// Parses JSON text. Non-integer numbers are kept as their source text so
// decimals convert exactly; duplicate keys are rejected. Errors carry line and
// column.
Json ParseJsonExact(std::string_view text);

// Integer, "p/q" string or decimal (string or number literal).
Rational RationalFromJson(const Json& value, const std::string& where);
inline Json RationalToJson(const Rational& r) { return r.ToString(); }

struct QuadraticInput {
  QuadraticGame game;
  std::string preset;  // empty, "cournot" or "public-good"
  std::map<std::string, double> params;
};

struct GameFile {
  std::string kind;  // strategic | bayesian | quadratic
  std::string name;
  std::variant<QuadraticInput, Game, BayesianGame> body;
  Json errata = Json::array();
  // Bayesian only: printed tables keyed by transform name.
  std::map<std::string, Game> printed;
};

GameFile ParseGameFile(std::string_view text);
GameFile LoadGameFile(const std::string& path);

// Strategic game file for game (same format ParseGameFile reads).
Json GameToJson(const Game& game, const std::string& name = "");

QuadraticInput MakeQuadraticPreset(const std::string& preset,
                                   const std::map<std::string, double>& params);

}  // namespace periodica

#endif  // PERIODICA_IO_HPP_
