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

#include "decoy/game.h"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>

#include "decoy/errors.h"

namespace decoy {

const char* PlayerName(Player p) { return p == Player::kP1 ? "P1" : "P2"; }

StateId GameGraph::AddState(Player owner, std::string name) {
  state_owner_.push_back(owner);
  state_name_.push_back(std::move(name));
  edges_.emplace_back();
  StateSet grown(num_states());
  finals_.ForEach([&](StateId s) { grown.insert(s); });
  finals_ = std::move(grown);
  return static_cast<StateId>(num_states() - 1);
}

ActionId GameGraph::AddAction(Player owner, std::string name) {
  action_owner_.push_back(owner);
  action_name_.push_back(std::move(name));
  return static_cast<ActionId>(num_actions() - 1);
}

void GameGraph::AddTransition(StateId from, ActionId action, StateId to) {
  if (!HasState(from) || !HasState(to)) {
    throw DecoyError(ErrorCode::kUnknownState,
                     "transition references state outside the game");
  }
  if (action >= num_actions()) {
    throw DecoyError(ErrorCode::kUnknownAction,
                     "transition references undeclared action " +
                         std::to_string(action));
  }
  edges_[from].push_back({action, to});
}

void GameGraph::SetTransitions(StateId s, std::vector<Edge> edges) {
  for (const Edge& e : edges) {
    if (!HasState(e.to)) {
      throw DecoyError(ErrorCode::kUnknownState, "edge target out of range");
    }
    if (e.action >= num_actions()) {
      throw DecoyError(ErrorCode::kUnknownAction, "edge action out of range");
    }
  }
  edges_.at(s) = std::move(edges);
}

void GameGraph::MakeSink(StateId s) {
  for (Edge& e : edges_.at(s)) e.to = s;
}

void GameGraph::SetInitial(StateId s) {
  if (!HasState(s)) throw DecoyError(ErrorCode::kUnknownState, "initial state");
  initial_ = s;
}

void GameGraph::AddFinal(StateId s) {
  if (!HasState(s)) throw DecoyError(ErrorCode::kUnknownState, "final state");
  finals_.insert(s);
}

void GameGraph::SetFinals(const StateSet& finals) {
  if (finals.universe() != num_states()) {
    throw DecoyError(ErrorCode::kUnknownState, "final set universe mismatch");
  }
  finals_ = finals;
}

std::size_t GameGraph::num_transitions() const {
  std::size_t n = 0;
  for (const auto& out : edges_) n += out.size();
  return n;
}

std::string GameGraph::StateLabel(StateId s) const {
  if (s < num_states() && !state_name_[s].empty()) return state_name_[s];
  return "#" + std::to_string(s);
}

std::string GameGraph::ActionLabel(ActionId a) const {
  if (a < num_actions() && !action_name_[a].empty()) return action_name_[a];
  return "#" + std::to_string(a);
}

std::optional<StateId> GameGraph::Successor(StateId s, ActionId a) const {
  for (const Edge& e : edges_[s])
    if (e.action == a) return e.to;
  return std::nullopt;
}

bool GameGraph::IsSink(StateId s) const {
  const auto& out = edges_[s];
  if (out.empty()) return false;
  return std::all_of(out.begin(), out.end(),
                     [s](const Edge& e) { return e.to == s; });
}

StateSet GameGraph::StatesOf(Player p) const {
  StateSet out(num_states());
  for (StateId s = 0; s < num_states(); ++s)
    if (state_owner_[s] == p) out.insert(s);
  return out;
}

namespace {

std::optional<std::uint32_t> ParseId(std::string_view text) {
  if (!text.empty() && text.front() == '#') text.remove_prefix(1);
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    return std::nullopt;
  return value;
}

}  // namespace

std::optional<StateId> GameGraph::FindState(std::string_view name) const {
  for (StateId s = 0; s < num_states(); ++s)
    if (state_name_[s] == name) return s;
  if (auto id = ParseId(name); id && *id < num_states()) return *id;
  return std::nullopt;
}

std::optional<ActionId> GameGraph::FindAction(std::string_view name,
                                              Player owner) const {
  for (ActionId a = 0; a < num_actions(); ++a)
    if (action_owner_[a] == owner && action_name_[a] == name) return a;
  if (auto id = ParseId(name);
      id && *id < num_actions() && action_owner_[*id] == owner)
    return *id;
  return std::nullopt;
}

const char* ViolationKindName(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kEmptyGame: return "empty game";
    case ViolationKind::kBadInitial: return "bad initial";
    case ViolationKind::kNoTransitions: return "no transitions";
    case ViolationKind::kOwnerMismatch: return "owner mismatch";
    case ViolationKind::kNondeterministic: return "nondeterministic";
    case ViolationKind::kFinalNotSink: return "final not sink";
  }
  return "unknown";
}

std::vector<Violation> ValidateGame(const GameGraph& g) {
  std::vector<Violation> out;
  if (g.num_states() == 0) {
    out.push_back({ViolationKind::kEmptyGame, kNoState, std::nullopt,
                   "game has no states"});
    return out;
  }
  if (!g.HasState(g.initial())) {
    out.push_back({ViolationKind::kBadInitial, g.initial(), std::nullopt,
                   "initial state is not a state of the game"});
  }
  for (StateId s = 0; s < g.num_states(); ++s) {
    const auto edges = g.out(s);
    if (edges.empty()) {
      out.push_back({ViolationKind::kNoTransitions, s, std::nullopt,
                     "state " + g.StateLabel(s) + " has no outgoing transition"});
    }
    std::set<ActionId> seen;
    for (const Edge& e : edges) {
      if (g.action_owner(e.action) != g.owner(s)) {
        out.push_back({ViolationKind::kOwnerMismatch, s, e.action,
                       "action " + g.ActionLabel(e.action) + " of " +
                           PlayerName(g.action_owner(e.action)) +
                           " used at " + PlayerName(g.owner(s)) + " state " +
                           g.StateLabel(s)});
      }
      if (!seen.insert(e.action).second) {
        out.push_back({ViolationKind::kNondeterministic, s, e.action,
                       "action " + g.ActionLabel(e.action) +
                           " has several successors at " + g.StateLabel(s)});
      }
      if (g.finals().contains(s) && e.to != s) {
        out.push_back({ViolationKind::kFinalNotSink, s, e.action,
                       "final state " + g.StateLabel(s) + " leaves to " +
                           g.StateLabel(e.to) + " via " +
                           g.ActionLabel(e.action)});
      }
    }
  }
  return out;
}

const char* TerminalKindName(TerminalKind kind) {
  switch (kind) {
    case TerminalKind::kHitTarget: return "hit_target";
    case TerminalKind::kEnteredSink: return "entered_sink";
    case TerminalKind::kCycleDetected: return "cycle_detected";
  }
  return "unknown";
}

Path DeterministicOutcome(const GameGraph& g, StateId s,
                          const DeterministicStrategy& p1,
                          const DeterministicStrategy& p2) {
  if (!g.HasState(s)) throw DecoyError(ErrorCode::kUnknownState, "start state");
  Path path;
  std::vector<bool> visited(g.num_states(), false);
  StateId cur = s;
  while (true) {
    path.states.push_back(cur);
    if (g.finals().contains(cur)) {
      path.terminal_kind = TerminalKind::kHitTarget;
      return path;
    }
    if (g.IsSink(cur)) {
      path.terminal_kind = TerminalKind::kEnteredSink;
      return path;
    }
    if (visited[cur]) {
      path.terminal_kind = TerminalKind::kCycleDetected;
      return path;
    }
    visited[cur] = true;
    const auto& strategy = g.owner(cur) == Player::kP1 ? p1 : p2;
    auto it = strategy.find(cur);
    if (it == strategy.end()) {
      throw DecoyError(ErrorCode::kMissingChoice,
                       "no action chosen at " + g.StateLabel(cur));
    }
    auto next = g.Successor(cur, it->second);
    if (!next) {
      throw DecoyError(ErrorCode::kMissingChoice,
                       "chosen action " + g.ActionLabel(it->second) +
                           " is not enabled at " + g.StateLabel(cur));
    }
    cur = *next;
  }
}

std::vector<PlayEdge> ReachablePlayGraph(const GameGraph& g, StateId s,
                                         const StrategySupport& p1,
                                         const StrategySupport& p2) {
  if (!g.HasState(s)) throw DecoyError(ErrorCode::kUnknownState, "start state");
  std::set<PlayEdge> edges;
  std::vector<bool> seen(g.num_states(), false);
  std::deque<StateId> queue{s};
  seen[s] = true;
  while (!queue.empty()) {
    const StateId cur = queue.front();
    queue.pop_front();
    const auto& support = g.owner(cur) == Player::kP1 ? p1 : p2;
    auto it = support.find(cur);
    if (it == support.end()) {
      if (g.IsSink(cur)) continue;
      throw DecoyError(ErrorCode::kMissingChoice,
                       "no support at " + g.StateLabel(cur));
    }
    for (ActionId a : it->second) {
      auto next = g.Successor(cur, a);
      if (!next) {
        throw DecoyError(ErrorCode::kMissingChoice,
                         "support action " + g.ActionLabel(a) +
                             " is not enabled at " + g.StateLabel(cur));
      }
      edges.insert({cur, a, *next});
      if (!seen[*next]) {
        seen[*next] = true;
        queue.push_back(*next);
      }
    }
  }
  return {edges.begin(), edges.end()};
}

StrategySupport FullSupport(const GameGraph& g, Player p) {
  StrategySupport out;
  for (StateId s = 0; s < g.num_states(); ++s) {
    if (g.owner(s) != p || g.out(s).empty()) continue;
    auto& acts = out[s];
    for (const Edge& e : g.out(s)) acts.push_back(e.action);
    std::sort(acts.begin(), acts.end());
    acts.erase(std::unique(acts.begin(), acts.end()), acts.end());
  }
  return out;
}

StateSet Subgame::ToBase(const StateSet& sub, std::size_t base_universe) const {
  StateSet out(base_universe);
  sub.ForEach([&](StateId s) { out.insert(to_base[s]); });
  return out;
}

StateSet Subgame::FromBase(const StateSet& base) const {
  StateSet out(to_base.size());
  base.ForEach([&](StateId s) {
    if (s < from_base.size() && from_base[s] != kNoState) out.insert(from_base[s]);
  });
  return out;
}

Subgame RestrictToStates(const GameGraph& g, const StateSet& keep) {
  Subgame sub;
  sub.from_base.assign(g.num_states(), kNoState);
  for (ActionId a = 0; a < g.num_actions(); ++a)
    sub.graph.AddAction(g.action_owner(a), g.action_name(a));
  keep.ForEach([&](StateId s) {
    sub.from_base[s] = sub.graph.AddState(g.owner(s), g.state_name(s));
    sub.to_base.push_back(s);
  });
  for (StateId local = 0; local < sub.to_base.size(); ++local) {
    for (const Edge& e : g.out(sub.to_base[local])) {
      if (sub.from_base[e.to] != kNoState)
        sub.graph.AddTransition(local, e.action, sub.from_base[e.to]);
    }
  }
  g.finals().ForEach([&](StateId s) {
    if (sub.from_base[s] != kNoState) sub.graph.AddFinal(sub.from_base[s]);
  });
  if (sub.from_base[g.initial()] != kNoState)
    sub.graph.SetInitial(sub.from_base[g.initial()]);
  return sub;
}

}  // namespace decoy
