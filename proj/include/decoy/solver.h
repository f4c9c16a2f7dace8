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

#ifndef DECOY_SOLVER_H_
#define DECOY_SOLVER_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "decoy/game.h"
#include "decoy/state_set.h"

namespace decoy {

inline constexpr std::uint32_t kInfiniteRank =
    std::numeric_limits<std::uint32_t>::max();

// Level sets of the reacher's attractor and everything derived from them.
struct SolveResult {
  StateSet target;
  Player reacher = Player::kP2;
  // levels[k] is Z_k (cumulative). levels.front() == target,
  // levels.back() == win_reacher.
  std::vector<StateSet> levels;
  // 0 on target, min{k : s in Z_k} inside the attractor, kInfiniteRank outside.
  std::vector<std::uint32_t> rank;
  StateSet win_reacher;
  StateSet win_opponent;
};

// Backward fixpoint Z_{k+1} = Z_k ∪ {reacher states with some successor in
// Z_k} ∪ {opponent states with every successor in Z_k}.
// Throws DecoyError(kUnknownState) if `target` is not over the game's states.
SolveResult Attractor(const GameGraph& g, const StateSet& target,
                      Player reacher);

// Reacher states in win_reacher \ target -> every strictly rank-reducing
// action.
StrategySupport GreedyReacherSupports(const SolveResult& res,
                                      const GameGraph& g);
// Opponent states in win_opponent -> every action staying in win_opponent.
StrategySupport OpponentSafetySupports(const SolveResult& res,
                                       const GameGraph& g);
// Reacher states in win_reacher \ target -> every action staying in
// win_reacher.
StrategySupport RandomizedReacherSupports(const SolveResult& res,
                                          const GameGraph& g);

// Controller/nature arena for qualitative analysis. Only supports are kept;
// transition probabilities never matter for almost-sure reachability.
struct MdpSkeleton {
  std::vector<bool> is_nature;
  // Decision states: one edge per action. Unused for nature states.
  std::vector<std::vector<Edge>> decision_edges;
  // Nature states: successor support, sorted and unique. Unused otherwise.
  std::vector<std::vector<StateId>> nature_successors;
  StateSet target;

  std::size_t num_states() const { return is_nature.size(); }
};

// States owned by `nature_player` become nature states whose support is the
// set of successors of their listed edges.
MdpSkeleton SkeletonFromGame(const GameGraph& g, Player nature_player,
                             const StateSet& target);

// States from which the controller can reach the target with probability one.
// Nested fixpoint: repeatedly keep only the states that reach the target with
// positive probability while never being forced out of the current candidate
// set.
StateSet AlmostSureReach(const MdpSkeleton& m);

// ---------------------------------------------------------------------------
// Brute-force oracles. They share no code with the solvers above.

struct OracleLimits {
  std::size_t max_states = 12;
  std::size_t max_actions_per_state = 2;
};

// Enumerates deterministic memoryless strategy pairs. A state is returned iff
// some reacher strategy makes every opponent strategy's play hit the target.
// Throws DecoyError(kTooLarge) above the limits.
StateSet SureOracle(const GameGraph& g, const StateSet& target, Player reacher,
                    const OracleLimits& limits = {});

// Enumerates deterministic memoryless controller policies. A state is returned
// iff under some policy every state reachable from it (nature playing its
// whole support) can still reach the target.
StateSet AsrOracle(const MdpSkeleton& m, const OracleLimits& limits = {});

}  // namespace decoy

#endif  // DECOY_SOLVER_H_
