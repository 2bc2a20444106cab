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

#include "periodica/periodicity.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace periodica {
namespace {

void RejectTies(const Game& game, TiePolicy policy) {
  if (policy != TiePolicy::kStrict) return;
  auto witnesses = ValidateNondegenerate(game);
  if (witnesses.empty()) return;
  std::string message = std::to_string(witnesses.size()) + " argmax tie(s); first: " +
                        DescribeWitness(game, witnesses.front());
  throw DegenerateGameError("periodicity", std::move(witnesses), message);
}

std::size_t CountOwner(const std::vector<Node>& closed, std::size_t player) {
  std::size_t n = 0;
  for (std::size_t k = 0; k + 1 < closed.size(); ++k) n += closed[k].player == player;
  return n;
}

}  // namespace

std::string TiePolicyName(TiePolicy policy) {
  return policy == TiePolicy::kStrict ? "strict" : "first-index";
}

std::string VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kPeriodic: return "Periodic";
    case Verdict::kNonPeriodic: return "NonPeriodic";
    case Verdict::kDegenerate: return "Degenerate";
  }
  return "?";
}

PhiMap2p BuildPhi2p(const Game& game, TiePolicy policy) {
  RequireTwoPlayers(game, "periodicity");
  RejectTies(game, policy);
  PhiMap2p m;
  for (std::size_t x = 0; x < game.num_actions(0); ++x) {
    OpponentArgmax a = ArgmaxOverOpponents(game, 0, x);
    m.phi1.push_back(a.maximizers.front()[1]);
    m.phi1_tied.push_back(a.maximizers.size() > 1);
  }
  for (std::size_t y = 0; y < game.num_actions(1); ++y) {
    OpponentArgmax a = ArgmaxOverOpponents(game, 1, y);
    m.phi2.push_back(a.maximizers.front()[0]);
    m.phi2_tied.push_back(a.maximizers.size() > 1);
  }
  m.tie_broken = std::find(m.phi1_tied.begin(), m.phi1_tied.end(), true) != m.phi1_tied.end() ||
                 std::find(m.phi2_tied.begin(), m.phi2_tied.end(), true) != m.phi2_tied.end();
  return m;
}

PhiMapNp::PhiMapNp(const Game& game, TiePolicy policy) {
  RejectTies(game, policy);
  argmax_.resize(game.num_players());
  tied_.resize(game.num_players());
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    for (std::size_t x = 0; x < game.num_actions(i); ++x) {
      OpponentArgmax a = ArgmaxOverOpponents(game, i, x);
      argmax_[i].push_back(a.maximizers.front());
      tied_[i].push_back(a.maximizers.size() > 1);
      tie_broken_ = tie_broken_ || a.maximizers.size() > 1;
    }
  }
}

const ActionPeriodicity& PeriodicityReport::at(std::size_t player, std::size_t action) const {
  for (const auto& a : actions) {
    if (a.node.player == player && a.node.action == action) return a;
  }
  throw Error(ErrorCode::kInvalidArgument, "periodicity", "no such (player, action)");
}

std::vector<std::size_t> PeriodicityReport::PeriodicActions(std::size_t player) const {
  std::vector<std::size_t> out;
  for (const auto& a : actions) {
    if (a.node.player == player && a.verdict != Verdict::kNonPeriodic) out.push_back(a.node.action);
  }
  return out;
}

PeriodicityReport PeriodicSet2p(const Game& game, TiePolicy policy) {
  const PhiMap2p phi = BuildPhi2p(game, policy);
  PeriodicityReport report;
  report.method = Method::kTwoPlayer;
  report.tie_policy = policy;
  report.tie_broken = phi.tie_broken;

  auto step = [&](Node n, bool& tied) {
    if (n.player == 0) {
      tied = tied || phi.phi1_tied[n.action];
      return Node{1, phi.phi1[n.action]};
    }
    tied = tied || phi.phi2_tied[n.action];
    return Node{0, phi.phi2[n.action]};
  };

  for (std::size_t player = 0; player < 2; ++player) {
    for (std::size_t x = 0; x < game.num_actions(player); ++x) {
      ActionPeriodicity r;
      r.node = {player, x};
      std::vector<bool> seen(game.num_actions(player), false);
      seen[x] = true;
      r.trace.push_back(r.node);
      Node cur = r.node;
      bool tied = false;
      while (true) {
        Node mid = step(cur, tied);
        cur = step(mid, tied);
        r.trace.push_back(mid);
        r.trace.push_back(cur);
        if (seen[cur.action]) break;
        seen[cur.action] = true;
      }
      r.tie_dependent = tied;
      if (cur == r.node) {
        r.cycle = r.trace;
        r.cycle_length = r.cycle.size() - 1;
        r.period = *r.cycle_length / 2;
        r.verdict = tied ? Verdict::kDegenerate : Verdict::kPeriodic;
        r.cycles.push_back(r.cycle);
      }
      report.actions.push_back(std::move(r));
    }
  }
  return report;
}

PeriodicityReport PeriodicGraphNp(const Game& game, TiePolicy policy,
                                  const GraphOptions& options) {
  const PhiMapNp phi(game, policy);
  const std::size_t players = game.num_players();
  std::vector<std::size_t> offset(players + 1, 0);
  for (std::size_t i = 0; i < players; ++i) offset[i + 1] = offset[i] + game.num_actions(i);
  const std::size_t v_count = offset[players];
  auto node_of = [&](std::size_t v) {
    std::size_t i = static_cast<std::size_t>(
        std::upper_bound(offset.begin(), offset.end(), v) - offset.begin() - 1);
    return Node{i, v - offset[i]};
  };
  auto id_of = [&](Node n) { return offset[n.player] + n.action; };

  std::vector<std::vector<std::size_t>> adj(v_count);
  std::vector<bool> tied(v_count, false);
  for (std::size_t v = 0; v < v_count; ++v) {
    Node n = node_of(v);
    tied[v] = phi.tied(n.player, n.action);
    for (std::size_t j = 0; j < players; ++j) {
      if (j != n.player) adj[v].push_back(id_of({j, phi.phi(n.player, j, n.action)}));
    }
  }

  const std::size_t max_len = options.max_cycle_len == 0 ? v_count : options.max_cycle_len;
  if (max_len < 2) {
    throw Error(ErrorCode::kInvalidArgument, "periodicity", "max_cycle_len must be at least 2");
  }

  auto to_nodes = [&](const std::vector<std::size_t>& ids) {
    std::vector<Node> out;
    for (std::size_t id : ids) out.push_back(node_of(id));
    return out;
  };
  auto uses_tie = [&](const std::vector<std::size_t>& closed) {
    for (std::size_t k = 0; k + 1 < closed.size(); ++k) {
      if (tied[closed[k]]) return true;
    }
    return false;
  };

  // Shortest cycle through each node, by BFS.
  std::vector<std::vector<std::size_t>> shortest(v_count);
  for (std::size_t s = 0; s < v_count; ++s) {
    std::vector<std::size_t> parent(v_count, v_count);
    std::vector<bool> visited(v_count, false);
    std::deque<std::size_t> queue{s};
    visited[s] = true;
    std::size_t closing = v_count;
    while (!queue.empty() && closing == v_count) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t w : adj[u]) {
        if (w == s) {
          closing = u;
          break;
        }
        if (!visited[w]) {
          visited[w] = true;
          parent[w] = u;
          queue.push_back(w);
        }
      }
    }
    if (closing == v_count) continue;
    std::vector<std::size_t> path;
    for (std::size_t u = closing; u != s; u = parent[u]) path.push_back(u);
    path.push_back(s);
    std::reverse(path.begin(), path.end());
    path.push_back(s);
    shortest[s] = std::move(path);
  }

  PeriodicityReport report;
  report.method = Method::kGraph;
  report.tie_policy = policy;
  report.tie_broken = phi.tie_broken();
  report.max_cycle_len = max_len;

  for (std::size_t s = 0; s < v_count; ++s) {
    ActionPeriodicity r;
    r.node = node_of(s);
    if (!shortest[s].empty()) {
      // Simple cycles through s, depth-first in edge order.
      std::vector<std::vector<std::size_t>> found;
      std::vector<std::size_t> path{s};
      std::vector<bool> on_path(v_count, false);
      on_path[s] = true;
      bool truncated = false;
      auto dfs = [&](auto&& self, std::size_t u) -> void {
        for (std::size_t w : adj[u]) {
          if (truncated) return;
          if (w == s) {
            auto closed = path;
            closed.push_back(s);
            found.push_back(std::move(closed));
            if (found.size() >= options.max_cycles_per_node) truncated = true;
          } else if (!on_path[w] && path.size() < max_len) {
            on_path[w] = true;
            path.push_back(w);
            self(self, w);
            path.pop_back();
            on_path[w] = false;
          }
        }
      };
      dfs(dfs, s);
      std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
      });
      bool any_clean = !uses_tie(shortest[s]);
      for (const auto& c : found) {
        any_clean = any_clean || !uses_tie(c);
        r.cycles.push_back(to_nodes(c));
      }
      r.cycles_truncated = truncated;
      r.cycle = to_nodes(shortest[s]);
      r.cycle_length = shortest[s].size() - 1;
      r.period = CountOwner(r.cycle, r.node.player);
      r.verdict = any_clean ? Verdict::kPeriodic : Verdict::kDegenerate;
      r.trace = r.cycle;
      r.tie_dependent = uses_tie(shortest[s]);
    } else {
      // Nearest node lying on a cycle, then that node's cycle.
      std::vector<std::size_t> parent(v_count, v_count);
      std::vector<bool> visited(v_count, false);
      std::deque<std::size_t> queue{s};
      visited[s] = true;
      std::size_t target = v_count;
      while (!queue.empty() && target == v_count) {
        std::size_t u = queue.front();
        queue.pop_front();
        for (std::size_t w : adj[u]) {
          if (visited[w]) continue;
          visited[w] = true;
          parent[w] = u;
          if (!shortest[w].empty()) {
            target = w;
            break;
          }
          queue.push_back(w);
        }
      }
      std::vector<std::size_t> path;
      for (std::size_t u = target; u != s; u = parent[u]) path.push_back(u);
      path.push_back(s);
      std::reverse(path.begin(), path.end());
      path.insert(path.end(), shortest[target].begin() + 1, shortest[target].end());
      r.tie_dependent = uses_tie(path);
      r.trace = to_nodes(path);
    }
    report.actions.push_back(std::move(r));
  }
  return report;
}

NashPeriodicity NashPeriodicityCheck(const Game& game, const Profile& nash, TiePolicy policy) {
  RequireTwoPlayers(game, "periodicity");
  if (nash.size() != 2 || nash[0] >= game.num_actions(0) || nash[1] >= game.num_actions(1)) {
    throw Error(ErrorCode::kInvalidArgument, "periodicity", "bad Nash profile");
  }
  const PhiMap2p phi = BuildPhi2p(game, policy);
  NashPeriodicity out;
  out.nash = nash;
  out.theorem_conditions = phi.phi1[nash[0]] == nash[1] && phi.phi2[nash[1]] == nash[0];
  if (out.theorem_conditions) {
    out.period = 1;
    out.cycle = {Node{0, nash[0]}, Node{1, nash[1]}, Node{0, nash[0]}};
  }
  const PeriodicityReport scan = PeriodicSet2p(game, policy);
  const auto& a = scan.at(0, nash[0]);
  const auto& b = scan.at(1, nash[1]);
  out.verdict_a = a.verdict;
  out.verdict_b = b.verdict;
  out.period_a = a.period;
  out.period_b = b.period;
  return out;
}

std::string FormatNodes(const Game& game, const std::vector<Node>& nodes) {
  std::string out;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (k) out += " -> ";
    out += game.action_label(nodes[k].player, nodes[k].action);
  }
  return out;
}

}  // namespace periodica
