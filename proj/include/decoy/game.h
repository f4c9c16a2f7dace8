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

// Game arena for two-player turn-based deterministic reachability games.
//
// States and actions are dense integer ids with optional names. Each state is
// owned by one player and its outgoing transitions are listed as
// (action, successor) edges. A sink is a state whose edges all self-loop; the
// states in `finals()` are required to be sinks for a game to validate.

#ifndef DECOY_GAME_H_
#define DECOY_GAME_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "decoy/state_set.h"

namespace decoy {

enum class Player { kP1 = 1, kP2 = 2 };

inline Player Opponent(Player p) {
  return p == Player::kP1 ? Player::kP2 : Player::kP1;
}
const char* PlayerName(Player p);

inline constexpr StateId kNoState = static_cast<StateId>(-1);

struct Edge {
  ActionId action;
  StateId to;
  friend bool operator==(const Edge&, const Edge&) = default;
};

class GameGraph {
 public:
  GameGraph() = default;

  StateId AddState(Player owner, std::string name = {});
  ActionId AddAction(Player owner, std::string name = {});
  // Throws DecoyError(kUnknownState / kUnknownAction) on out-of-range ids.
  // Owner consistency and determinism are checked by ValidateGame instead.
  void AddTransition(StateId from, ActionId action, StateId to);
  // Replaces every outgoing edge of `s`.
  void SetTransitions(StateId s, std::vector<Edge> edges);
  // Rewrites every outgoing edge of `s` into a self-loop on the same action.
  void MakeSink(StateId s);

  void SetInitial(StateId s);
  void AddFinal(StateId s);
  void SetFinals(const StateSet& finals);

  std::size_t num_states() const { return state_owner_.size(); }
  std::size_t num_actions() const { return action_owner_.size(); }
  std::size_t num_transitions() const;

  Player owner(StateId s) const { return state_owner_[s]; }
  Player action_owner(ActionId a) const { return action_owner_[a]; }
  const std::string& state_name(StateId s) const { return state_name_[s]; }
  const std::string& action_name(ActionId a) const { return action_name_[a]; }
  // Name if present, otherwise "#<id>".
  std::string StateLabel(StateId s) const;
  std::string ActionLabel(ActionId a) const;

  std::span<const Edge> out(StateId s) const { return edges_[s]; }
  std::optional<StateId> Successor(StateId s, ActionId a) const;
  bool HasState(StateId s) const { return s < num_states(); }
  // Has at least one edge and every edge self-loops.
  bool IsSink(StateId s) const;

  StateId initial() const { return initial_; }
  const StateSet& finals() const { return finals_; }
  StateSet AllStates() const { return StateSet::Full(num_states()); }
  StateSet StatesOf(Player p) const;

  // Lookup by name; accepts "#<id>" and bare decimal ids as a fallback.
  std::optional<StateId> FindState(std::string_view name) const;
  std::optional<ActionId> FindAction(std::string_view name, Player owner) const;

  friend bool operator==(const GameGraph&, const GameGraph&) = default;

 private:
  std::vector<Player> state_owner_;
  std::vector<std::string> state_name_;
  std::vector<Player> action_owner_;
  std::vector<std::string> action_name_;
  std::vector<std::vector<Edge>> edges_;
  StateId initial_ = 0;
  StateSet finals_;
};

// ---------------------------------------------------------------------------
// Validation

enum class ViolationKind {
  kEmptyGame,
  kBadInitial,
  kNoTransitions,
  kOwnerMismatch,
  kNondeterministic,
  kFinalNotSink,
};
const char* ViolationKindName(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  StateId state = kNoState;
  std::optional<ActionId> action;
  std::string message;
};

// Returns every violated arena invariant; empty iff the game is valid.
std::vector<Violation> ValidateGame(const GameGraph& g);

// ---------------------------------------------------------------------------
// Strategies and outcomes

using DeterministicStrategy = std::map<StateId, ActionId>;
// Memoryless randomized strategy, represented by its supports only.
using StrategySupport = std::map<StateId, std::vector<ActionId>>;

enum class TerminalKind { kHitTarget, kEnteredSink, kCycleDetected };
const char* TerminalKindName(TerminalKind kind);

struct Path {
  std::vector<StateId> states;
  TerminalKind terminal_kind;
};

// Plays both deterministic strategies from `s` until a final state or a
// non-final sink is entered, or a state repeats (the repeated state is the
// last element). Throws DecoyError(kMissingChoice) when a visited non-sink
// state has no chosen action, or the choice is not enabled there.
Path DeterministicOutcome(const GameGraph& g, StateId s,
                          const DeterministicStrategy& p1,
                          const DeterministicStrategy& p2);

struct PlayEdge {
  StateId from;
  ActionId action;
  StateId to;
  friend auto operator<=>(const PlayEdge&, const PlayEdge&) = default;
};

// Edges traversable from `s` when both players only use support actions.
// Sinks without a support entry absorb the play and contribute no edges.
std::vector<PlayEdge> ReachablePlayGraph(const GameGraph& g, StateId s,
                                         const StrategySupport& p1,
                                         const StrategySupport& p2);

// All enabled actions at every non-sink state owned by `p`.
StrategySupport FullSupport(const GameGraph& g, Player p);

// ---------------------------------------------------------------------------
// Sub-arenas

// A game induced on a subset of states: edges leaving the subset are dropped,
// ids are compacted in ascending order, and the action table is shared.
struct Subgame {
  GameGraph graph;
  std::vector<StateId> to_base;    // sub id -> base id
  std::vector<StateId> from_base;  // base id -> sub id or kNoState

  StateSet ToBase(const StateSet& sub, std::size_t base_universe) const;
  StateSet FromBase(const StateSet& base) const;
};

Subgame RestrictToStates(const GameGraph& g, const StateSet& keep);

}  // namespace decoy

#endif  // DECOY_GAME_H_
