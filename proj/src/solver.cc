// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "decoy/solver.h"

#include <algorithm>

#include "decoy/errors.h"

namespace decoy {
namespace {

// Predecessor lists with one entry per edge, so that an opponent state with
// two actions into the same successor is counted twice.
std::vector<std::vector<StateId>> EdgePredecessors(const GameGraph& g) {
  std::vector<std::vector<StateId>> preds(g.num_states());
  for (StateId s = 0; s < g.num_states(); ++s)
    for (const Edge& e : g.out(s)) preds[e.to].push_back(s);
  return preds;
}

std::vector<ActionId> SortedUnique(std::vector<ActionId> acts) {
  std::sort(acts.begin(), acts.end());
  acts.erase(std::unique(acts.begin(), acts.end()), acts.end());
  return acts;
}

}  // namespace

SolveResult Attractor(const GameGraph& g, const StateSet& target,
                      Player reacher) {
  const std::size_t n = g.num_states();
  if (target.universe() != n) {
    throw DecoyError(ErrorCode::kUnknownState,
                     "target set is over " + std::to_string(target.universe()) +
                         " states, game has " + std::to_string(n));
  }
  SolveResult res;
  res.target = target;
  res.reacher = reacher;
  res.rank.assign(n, kInfiniteRank);

  const auto preds = EdgePredecessors(g);
  std::vector<std::size_t> remaining(n);
  for (StateId s = 0; s < n; ++s) remaining[s] = g.out(s).size();

  StateSet attracted = target;
  std::vector<StateId> frontier = target.ToVector();
  for (StateId s : frontier) res.rank[s] = 0;
  res.levels.push_back(attracted);

  // Opponent states without edges satisfy the universal condition vacuously.
  std::vector<StateId> vacuous;
  for (StateId s = 0; s < n; ++s)
    if (g.owner(s) != reacher && remaining[s] == 0 && !attracted.contains(s))
      vacuous.push_back(s);

  for (std::uint32_t level = 1;; ++level) {
    std::vector<StateId> next;
    if (level == 1) next = vacuous;
    StateSet pending(n);
    for (StateId s : next) pending.insert(s);
    for (StateId v : frontier) {
      for (StateId u : preds[v]) {
        if (attracted.contains(u) || pending.contains(u)) continue;
        if (g.owner(u) == reacher || --remaining[u] == 0) {
          pending.insert(u);
          next.push_back(u);
        }
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    for (StateId s : next) {
      attracted.insert(s);
      res.rank[s] = level;
    }
    res.levels.push_back(attracted);
    frontier = std::move(next);
  }
  res.win_reacher = attracted;
  res.win_opponent = attracted.Complement();
  return res;
}

StrategySupport GreedyReacherSupports(const SolveResult& res,
                                      const GameGraph& g) {
  StrategySupport out;
  (res.win_reacher - res.target).ForEach([&](StateId s) {
    if (g.owner(s) != res.reacher) return;
    std::vector<ActionId> acts;
    for (const Edge& e : g.out(s))
      if (res.rank[e.to] < res.rank[s]) acts.push_back(e.action);
    if (!acts.empty()) out[s] = SortedUnique(std::move(acts));
  });
  return out;
}

StrategySupport OpponentSafetySupports(const SolveResult& res,
                                       const GameGraph& g) {
  StrategySupport out;
  res.win_opponent.ForEach([&](StateId s) {
    if (g.owner(s) == res.reacher) return;
    std::vector<ActionId> acts;
    for (const Edge& e : g.out(s))
      if (res.win_opponent.contains(e.to)) acts.push_back(e.action);
    if (!acts.empty()) out[s] = SortedUnique(std::move(acts));
  });
  return out;
}

StrategySupport RandomizedReacherSupports(const SolveResult& res,
                                          const GameGraph& g) {
  StrategySupport out;
  (res.win_reacher - res.target).ForEach([&](StateId s) {
    if (g.owner(s) != res.reacher) return;
    std::vector<ActionId> acts;
    for (const Edge& e : g.out(s))
      if (res.win_reacher.contains(e.to)) acts.push_back(e.action);
    if (!acts.empty()) out[s] = SortedUnique(std::move(acts));
  });
  return out;
}

MdpSkeleton SkeletonFromGame(const GameGraph& g, Player nature_player,
                             const StateSet& target) {
  const std::size_t n = g.num_states();
  if (target.universe() != n) {
    throw DecoyError(ErrorCode::kUnknownState, "target universe mismatch");
  }
  MdpSkeleton m;
  m.is_nature.assign(n, false);
  m.decision_edges.assign(n, {});
  m.nature_successors.assign(n, {});
  m.target = target;
  for (StateId s = 0; s < n; ++s) {
    if (g.owner(s) == nature_player) {
      m.is_nature[s] = true;
      auto& succ = m.nature_successors[s];
      for (const Edge& e : g.out(s)) succ.push_back(e.to);
      std::sort(succ.begin(), succ.end());
      succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
    } else {
      m.decision_edges[s].assign(g.out(s).begin(), g.out(s).end());
    }
  }
  return m;
}

StateSet AlmostSureReach(const MdpSkeleton& m) {
  const std::size_t n = m.num_states();
  std::vector<std::vector<StateId>> preds(n);
  for (StateId s = 0; s < n; ++s) {
    if (m.is_nature[s]) {
      for (StateId t : m.nature_successors[s]) preds[t].push_back(s);
    } else {
      for (const Edge& e : m.decision_edges[s]) preds[e.to].push_back(s);
    }
  }

  StateSet candidates = StateSet::Full(n);
  while (true) {
    // A nature state may stay only if its whole support is in the candidates.
    StateSet safe_nature(n);
    for (StateId s = 0; s < n; ++s) {
      if (!m.is_nature[s] || !candidates.contains(s)) continue;
      const auto& succ = m.nature_successors[s];
      if (std::all_of(succ.begin(), succ.end(),
                      [&](StateId t) { return candidates.contains(t); }))
        safe_nature.insert(s);
    }
    // Positive-probability backward reachability inside the candidates.
    StateSet reach = m.target & candidates;
    std::vector<StateId> stack = reach.ToVector();
    while (!stack.empty()) {
      const StateId v = stack.back();
      stack.pop_back();
      for (StateId u : preds[v]) {
        if (reach.contains(u) || !candidates.contains(u) || m.target.contains(u))
          continue;
        if (m.is_nature[u] && !safe_nature.contains(u)) continue;
        reach.insert(u);
        stack.push_back(u);
      }
    }
    if (reach == candidates) return candidates;
    candidates = reach;
  }
}

// ---------------------------------------------------------------------------
// Oracles

namespace {

void CheckOracleLimits(std::size_t states, std::size_t max_choices,
                       const OracleLimits& limits) {
  if (states > limits.max_states) {
    throw DecoyError(ErrorCode::kTooLarge,
                     std::to_string(states) + " states exceed oracle bound " +
                         std::to_string(limits.max_states));
  }
  if (max_choices > limits.max_actions_per_state) {
    throw DecoyError(ErrorCode::kTooLarge,
                     std::to_string(max_choices) +
                         " actions at one state exceed oracle bound " +
                         std::to_string(limits.max_actions_per_state));
  }
}

// Mixed-radix counter over per-state choice indices. Returns false once every
// combination has been produced.
bool NextCombination(std::vector<std::size_t>& digits,
                     const std::vector<std::size_t>& radix) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (++digits[i] < radix[i]) return true;
    digits[i] = 0;
  }
  return false;
}

}  // namespace

StateSet SureOracle(const GameGraph& g, const StateSet& target, Player reacher,
                    const OracleLimits& limits) {
  const std::size_t n = g.num_states();
  if (target.universe() != n) {
    throw DecoyError(ErrorCode::kUnknownState, "target universe mismatch");
  }
  std::size_t widest = 0;
  for (StateId s = 0; s < n; ++s) widest = std::max(widest, g.out(s).size());
  CheckOracleLimits(n, widest, limits);

  // Choice points: non-target states with at least one edge.
  std::vector<StateId> mine, theirs;
  for (StateId s = 0; s < n; ++s) {
    if (target.contains(s) || g.out(s).empty()) continue;
    (g.owner(s) == reacher ? mine : theirs).push_back(s);
  }
  auto radix_of = [&](const std::vector<StateId>& states) {
    std::vector<std::size_t> radix;
    for (StateId s : states) radix.push_back(g.out(s).size());
    return radix;
  };
  const auto mine_radix = radix_of(mine);
  const auto theirs_radix = radix_of(theirs);

  std::vector<StateId> next(n, kNoState);
  StateSet winning(n);
  std::vector<std::size_t> mine_digits(mine.size(), 0);
  do {
    for (std::size_t i = 0; i < mine.size(); ++i)
      next[mine[i]] = g.out(mine[i])[mine_digits[i]].to;
    StateSet forced = StateSet::Full(n);
    std::vector<std::size_t> theirs_digits(theirs.size(), 0);
    do {
      for (std::size_t i = 0; i < theirs.size(); ++i)
        next[theirs[i]] = g.out(theirs[i])[theirs_digits[i]].to;
      // Walk the unique play from every start state.
      for (StateId start = 0; start < n; ++start) {
        if (!forced.contains(start)) continue;
        std::vector<bool> seen(n, false);
        StateId cur = start;
        bool hit = false;
        while (true) {
          if (target.contains(cur)) {
            hit = true;
            break;
          }
          if (seen[cur] || next[cur] == kNoState) break;
          seen[cur] = true;
          cur = next[cur];
        }
        if (!hit) forced.erase(start);
      }
    } while (!forced.empty() && NextCombination(theirs_digits, theirs_radix));
    winning |= forced;
  } while (NextCombination(mine_digits, mine_radix));
  return winning;
}

StateSet AsrOracle(const MdpSkeleton& m, const OracleLimits& limits) {
  const std::size_t n = m.num_states();
  std::size_t widest = 0;
  std::vector<StateId> choice_states;
  for (StateId s = 0; s < n; ++s) {
    if (m.is_nature[s]) continue;
    widest = std::max(widest, m.decision_edges[s].size());
    if (!m.target.contains(s) && !m.decision_edges[s].empty())
      choice_states.push_back(s);
  }
  CheckOracleLimits(n, widest, limits);

  std::vector<std::size_t> radix;
  for (StateId s : choice_states) radix.push_back(m.decision_edges[s].size());
  std::vector<std::size_t> digits(choice_states.size(), 0);

  StateSet winning(n);
  do {
    // Induced chain; target states absorb.
    std::vector<std::vector<StateId>> succ(n);
    for (StateId s = 0; s < n; ++s) {
      if (m.target.contains(s)) continue;
      if (m.is_nature[s]) succ[s] = m.nature_successors[s];
    }
    for (std::size_t i = 0; i < choice_states.size(); ++i)
      succ[choice_states[i]] = {m.decision_edges[choice_states[i]][digits[i]].to};

    // reach[s][t]: t reachable from s (reflexive).
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (StateId s = 0; s < n; ++s) {
      std::vector<StateId> stack{s};
      reach[s][s] = true;
      while (!stack.empty()) {
        const StateId v = stack.back();
        stack.pop_back();
        for (StateId t : succ[v]) {
          if (!reach[s][t]) {
            reach[s][t] = true;
            stack.push_back(t);
          }
        }
      }
    }
    std::vector<bool> can_reach_target(n, false);
    for (StateId s = 0; s < n; ++s)
      for (StateId t = 0; t < n; ++t)
        if (reach[s][t] && m.target.contains(t)) can_reach_target[s] = true;
    for (StateId s = 0; s < n; ++s) {
      bool ok = true;
      for (StateId t = 0; t < n && ok; ++t)
        if (reach[s][t] && !can_reach_target[t]) ok = false;
      if (ok) winning.insert(s);
    }
  } while (NextCombination(digits, radix));
  return winning;
}

}  // namespace decoy
