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

#include "periodica/bayes.hpp"

#include <map>
#include <set>

namespace periodica {
namespace {

[[noreturn]] void BadPrior(const std::string& message) {
  throw Error(ErrorCode::kInvalidPrior, "bayes", message);
}

struct Support {
  Rational weight;
  std::size_t state;
  std::vector<std::size_t> types;
};

std::vector<Support> NonZero(const TypeSpace& space, const std::vector<Rational>& dense) {
  std::vector<Support> out;
  for (std::size_t e = 0; e < dense.size(); ++e) {
    if (dense[e].is_zero()) continue;
    auto [state, types] = space.Decode(e);
    out.push_back({dense[e], state, std::move(types)});
  }
  return out;
}

Game InterimGame(const BayesianGame& bg) {
  const std::size_t n = bg.players().size();
  std::vector<std::size_t> first(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) first[i + 1] = first[i] + bg.types()[i].size();

  std::map<std::string, int> label_count;
  for (const auto& ts : bg.types()) {
    for (const auto& t : ts) ++label_count[t];
  }
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> actions;
  std::vector<std::pair<std::size_t, std::size_t>> owner;
  std::vector<std::vector<Support>> beliefs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < bg.types()[i].size(); ++t) {
      const std::string& tl = bg.types()[i][t];
      labels.push_back(label_count[tl] > 1 ? bg.players()[i] + ":" + tl : tl);
      actions.push_back(bg.actions()[i]);
      owner.emplace_back(i, t);
      beliefs.push_back(NonZero(bg.space(), bg.Belief(i, t)));
    }
  }
  std::vector<std::size_t> sizes;
  for (const auto& a : actions) sizes.push_back(a.size());
  CheckedProfileCount(sizes, "bayes");

  return Game::FromFunction(labels, actions, [&](const Profile& s) {
    std::vector<Rational> out;
    out.reserve(s.size());
    Profile a(n);
    for (std::size_t k = 0; k < s.size(); ++k) {
      const std::size_t i = owner[k].first;
      Rational sum;
      for (const Support& e : beliefs[k]) {
        for (std::size_t j = 0; j < n; ++j) a[j] = s[first[j] + e.types[j]];
        sum += e.weight * bg.state_game(e.state).payoff(a, i);
      }
      out.push_back(std::move(sum));
    }
    return out;
  });
}

}  // namespace

TypeSpace::TypeSpace(std::size_t num_states, std::vector<std::size_t> types_per_player)
    : num_states_(num_states), types_(std::move(types_per_player)) {
  std::vector<std::size_t> sizes{num_states_};
  sizes.insert(sizes.end(), types_.begin(), types_.end());
  size_ = CheckedProfileCount(sizes, "bayes");
}

std::size_t TypeSpace::Index(std::size_t state, const std::vector<std::size_t>& types) const {
  if (state >= num_states_ || types.size() != types_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "bayes", "type profile out of range");
  }
  std::size_t index = state;
  for (std::size_t i = 0; i < types_.size(); ++i) {
    if (types[i] >= types_[i]) throw Error(ErrorCode::kInvalidArgument, "bayes", "type out of range");
    index = index * types_[i] + types[i];
  }
  return index;
}

std::pair<std::size_t, std::vector<std::size_t>> TypeSpace::Decode(std::size_t index) const {
  std::vector<std::size_t> types(types_.size());
  for (std::size_t i = types_.size(); i-- > 0;) {
    types[i] = index % types_[i];
    index /= types_[i];
  }
  return {index, types};
}

BayesianGame::BayesianGame(std::vector<std::string> players,
                           std::vector<std::vector<std::string>> actions,
                           std::vector<std::string> states,
                           std::vector<std::vector<std::string>> types,
                           std::optional<std::vector<Rational>> prior,
                           std::optional<std::vector<std::vector<std::vector<Rational>>>> beliefs,
                           std::vector<Game> state_games)
    : players_(std::move(players)),
      actions_(std::move(actions)),
      states_(std::move(states)),
      types_(std::move(types)),
      space_(states_.size(), [&] {
        std::vector<std::size_t> v;
        for (const auto& t : types_) v.push_back(t.size());
        return v;
      }()),
      prior_(std::move(prior)),
      state_games_(std::move(state_games)) {
  const std::size_t n = players_.size();
  if (n < 2 || actions_.size() != n || types_.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "bayes",
                "players, actions and types must have one entry per player (at least 2)");
  }
  if (states_.empty()) throw Error(ErrorCode::kDimensionMismatch, "bayes", "no states");
  for (const auto& t : types_) {
    if (t.empty()) throw Error(ErrorCode::kDimensionMismatch, "bayes", "player without types");
    if (std::set<std::string>(t.begin(), t.end()).size() != t.size()) {
      throw Error(ErrorCode::kInvalidArgument, "bayes", "duplicate type label");
    }
  }
  if (std::set<std::string>(states_.begin(), states_.end()).size() != states_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "bayes", "duplicate state label");
  }
  if (state_games_.size() != states_.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "bayes", "one payoff tensor per state required");
  }
  for (const Game& g : state_games_) {
    if (g.num_players() != n || g.actions() != actions_) {
      throw Error(ErrorCode::kDimensionMismatch, "bayes", "state payoff shape mismatch");
    }
  }
  if (prior_.has_value() == beliefs.has_value()) {
    throw Error(ErrorCode::kInvalidArgument, "bayes",
                "exactly one of a common prior and interim beliefs is required");
  }

  const Rational zero(0), one(1);
  beliefs_.resize(n);
  if (prior_) {
    if (prior_->size() != space_.size()) BadPrior("prior has the wrong size");
    Rational total;
    for (const Rational& w : *prior_) {
      if (w < zero) BadPrior("negative prior entry " + w.ToDisplay());
      total += w;
    }
    if (total != one) BadPrior("prior sums to " + total.ToDisplay() + ", not 1");
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rational> marginal(types_[i].size());
      for (std::size_t e = 0; e < space_.size(); ++e) {
        marginal[space_.Decode(e).second[i]] += (*prior_)[e];
      }
      for (std::size_t t = 0; t < types_[i].size(); ++t) {
        if (marginal[t].is_zero()) BadPrior("type '" + types_[i][t] + "' has zero probability");
        std::vector<Rational> b(space_.size());
        for (std::size_t e = 0; e < space_.size(); ++e) {
          if (space_.Decode(e).second[i] == t) b[e] = (*prior_)[e] / marginal[t];
        }
        beliefs_[i].push_back(std::move(b));
      }
    }
  } else {
    beliefs_ = std::move(*beliefs);
    if (beliefs_.size() != n) BadPrior("beliefs needed for every player");
    for (std::size_t i = 0; i < n; ++i) {
      if (beliefs_[i].size() != types_[i].size()) BadPrior("beliefs needed for every type");
      for (std::size_t t = 0; t < types_[i].size(); ++t) {
        const auto& b = beliefs_[i][t];
        if (b.size() != space_.size()) BadPrior("belief table has the wrong size");
        Rational total;
        for (std::size_t e = 0; e < b.size(); ++e) {
          if (b[e] < zero) BadPrior("negative belief entry");
          if (!b[e].is_zero() && space_.Decode(e).second[i] != t) {
            BadPrior("belief of type '" + types_[i][t] + "' puts weight on another own type");
          }
          total += b[e];
        }
        if (total != one) {
          BadPrior("beliefs of type '" + types_[i][t] + "' sum to " + total.ToDisplay());
        }
      }
    }
  }
}

const std::vector<Rational>& BayesianGame::prior() const {
  if (!prior_) throw Error(ErrorCode::kNoCommonPrior, "bayes", "game has interim beliefs only");
  return *prior_;
}

std::string TransformName(Transform t) {
  switch (t) {
    case Transform::kExAnte: return "ex-ante";
    case Transform::kInterimCorrelated: return "interim-correlated";
    case Transform::kInterimIndependent: return "interim-independent";
  }
  return "?";
}

std::optional<Transform> ParseTransform(const std::string& name) {
  for (Transform t : {Transform::kExAnte, Transform::kInterimCorrelated,
                      Transform::kInterimIndependent}) {
    if (TransformName(t) == name) return t;
  }
  return std::nullopt;
}

Game ExAnteTransform(const BayesianGame& bg) {
  if (!bg.has_common_prior()) {
    throw Error(ErrorCode::kNoCommonPrior, "bayes", "the ex-ante game needs a common prior");
  }
  const std::size_t n = bg.players().size();
  std::vector<std::vector<std::vector<std::size_t>>> plans(n);
  std::vector<std::vector<std::string>> labels(n);
  std::vector<std::size_t> sizes;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t na = bg.actions()[i].size();
    const std::size_t nt = bg.types()[i].size();
    const std::size_t count = CheckedProfileCount(std::vector<std::size_t>(nt, na), "bayes");
    sizes.push_back(count);
    for (std::size_t s = 0; s < count; ++s) {
      std::vector<std::size_t> plan(nt);
      std::size_t rest = s;
      for (std::size_t t = nt; t-- > 0;) {
        plan[t] = rest % na;
        rest /= na;
      }
      std::string label;
      for (std::size_t a : plan) label += bg.actions()[i][a];
      plans[i].push_back(std::move(plan));
      labels[i].push_back(std::move(label));
    }
  }
  CheckedProfileCount(sizes, "bayes");
  const std::vector<Support> support = NonZero(bg.space(), bg.prior());

  return Game::FromFunction(bg.players(), labels, [&](const Profile& s) {
    std::vector<Rational> out(n);
    Profile a(n);
    for (const Support& e : support) {
      for (std::size_t j = 0; j < n; ++j) a[j] = plans[j][s[j]][e.types[j]];
      auto u = bg.state_game(e.state).payoffs(a);
      for (std::size_t i = 0; i < n; ++i) out[i] += e.weight * u[i];
    }
    return out;
  });
}

Game InterimIndependentTransform(const BayesianGame& bg) { return InterimGame(bg); }

Game InterimCorrelatedTransform(const BayesianGame& bg) { return InterimGame(bg); }

Game ApplyTransform(const BayesianGame& bg, Transform t) {
  switch (t) {
    case Transform::kExAnte: return ExAnteTransform(bg);
    case Transform::kInterimCorrelated: return InterimCorrelatedTransform(bg);
    case Transform::kInterimIndependent: return InterimIndependentTransform(bg);
  }
  throw Error(ErrorCode::kInvalidArgument, "bayes", "unknown transform");
}

PeriodicityReport BayesPeriodicity(const BayesianGame& bg, Transform t, TiePolicy policy,
                                   const GraphOptions& options) {
  const Game g = ApplyTransform(bg, t);
  PeriodicityReport r =
      g.num_players() == 2 ? PeriodicSet2p(g, policy) : PeriodicGraphNp(g, policy, options);
  r.transform = TransformName(t);
  return r;
}

std::vector<CellMismatch> DiffPayoffs(const Game& expected, const Game& actual) {
  if (expected.shape() != actual.shape()) {
    throw Error(ErrorCode::kDimensionMismatch, "bayes", "tables have different shapes");
  }
  std::vector<CellMismatch> out;
  ForEachProfile(expected, [&](const Profile& p) {
    for (std::size_t i = 0; i < expected.num_players(); ++i) {
      if (expected.payoff(p, i) != actual.payoff(p, i)) {
        out.push_back({p, i, expected.payoff(p, i), actual.payoff(p, i)});
      }
    }
  });
  return out;
}

}  // namespace periodica
