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

#include "periodica/random_games.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace periodica {
namespace {

std::vector<std::vector<std::string>> Labels(const std::vector<std::size_t>& shape) {
  std::vector<std::vector<std::string>> out;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    const char prefix = static_cast<char>('a' + i);
    std::vector<std::string> a;
    for (std::size_t k = 0; k < shape[i]; ++k) a.push_back(std::string(1, prefix) + std::to_string(k + 1));
    out.push_back(a);
  }
  return out;
}

std::vector<std::string> Players(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('A' + i)));
  return out;
}

}  // namespace

Game RandomDistinctGame(std::mt19937_64& rng, const std::vector<std::size_t>& shape) {
  const std::size_t n = shape.size();
  const std::size_t count = CheckedProfileCount(shape, "core");
  std::vector<std::vector<std::int64_t>> values(n, std::vector<std::int64_t>(count));
  for (auto& v : values) {
    std::iota(v.begin(), v.end(), -static_cast<std::int64_t>(count));
    std::shuffle(v.begin(), v.end(), rng);
  }
  std::vector<Rational> flat;
  flat.reserve(count * n);
  for (std::size_t k = 0; k < count; ++k) {
    for (std::size_t i = 0; i < n; ++i) flat.emplace_back(values[i][k]);
  }
  return Game(Players(n), Labels(shape), std::move(flat));
}

Game RandomIntegerGame(std::mt19937_64& rng, const std::vector<std::size_t>& shape,
                       std::int64_t lo, std::int64_t hi) {
  const std::size_t n = shape.size();
  const std::size_t count = CheckedProfileCount(shape, "core");
  std::uniform_int_distribution<std::int64_t> dist(lo, hi);
  std::vector<Rational> flat;
  flat.reserve(count * n);
  for (std::size_t k = 0; k < count * n; ++k) flat.emplace_back(dist(rng));
  return Game(Players(n), Labels(shape), std::move(flat));
}

}  // namespace periodica
