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

#ifndef PERIODICA_RANDOM_GAMES_HPP_
#define PERIODICA_RANDOM_GAMES_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "periodica/game.hpp"

namespace periodica {

// Each player's payoffs are distinct integers, so every argmax is unique.
Game RandomDistinctGame(std::mt19937_64& rng, const std::vector<std::size_t>& shape);

// Integer payoffs drawn uniformly from [lo, hi]; ties are possible.
Game RandomIntegerGame(std::mt19937_64& rng, const std::vector<std::size_t>& shape,
                       std::int64_t lo, std::int64_t hi);

}  // namespace periodica

#endif  // PERIODICA_RANDOM_GAMES_HPP_
