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

// Decoy-induced hypergames.
//
// P1 (the defender) places traps X and fake targets Y. In the true game every
// decoy is a sink. P2 (the attacker) is unaware of traps and believes fakes
// are goals, so it plays in its perceptual game (finals F ∪ Y) using only
// actions that are subjectively rationalizable there. P1 then wins
// deceptively from the states where it can force a visit to X ∪ Y against
// every such P2 behaviour.

#ifndef DECOY_HYPERGAME_H_
#define DECOY_HYPERGAME_H_

#include <optional>
#include <string_view>
#include <vector>

#include "decoy/game.h"
#include "decoy/solver.h"
#include "decoy/state_set.h"

namespace decoy {

struct DecoyPlacement {
  std::vector<StateId> traps;  // X
  std::vector<StateId> fakes;  // Y

  bool empty() const { return traps.empty() && fakes.empty(); }
  friend bool operator==(const DecoyPlacement&, const DecoyPlacement&) = default;
};

enum class Mode { kSure, kAlmostSure };
const char* ModeName(Mode mode);  // "sure" / "almost-sure"
std::optional<Mode> ParseMode(std::string_view text);

// Checks ids, X ∩ Y = ∅ and (X ∪ Y) ∩ F = ∅.
// Throws kUnknownState, kTrapFakeOverlap or kPlacementOverlapsFinals.
void CheckPlacement(const GameGraph& g, const DecoyPlacement& p);
StateSet TrapSet(const GameGraph& g, const DecoyPlacement& p);
StateSet FakeSet(const GameGraph& g, const DecoyPlacement& p);
StateSet DecoySet(const GameGraph& g, const DecoyPlacement& p);

// g with every decoy turned into a sink; finals stay F.
GameGraph TrueGame(const GameGraph& g, const DecoyPlacement& p);
// g with finals F ∪ Y; fakes keep their outgoing edges.
GameGraph PerceptualGame(const GameGraph& g, const DecoyPlacement& p);

struct RationalizableActionMap {
  Mode mode = Mode::kSure;
  // Indexed by state id; sorted and unique.
  std::vector<std::vector<ActionId>> sracts;

  bool Allows(StateId s, ActionId a) const;
};

// P2 states in Win2(perceptual) \ (F ∪ Y) are restricted to rank-reducing
// actions (Sure) or region-preserving actions (AlmostSure). Every other state
// keeps all of its enabled actions.
RationalizableActionMap RationalizableActions(const GameGraph& g,
                                              const DecoyPlacement& p,
                                              Mode mode);

struct HypergameModel {
  Mode mode = Mode::kSure;
  // True game induced on Win2(G, F) with P2 edges filtered to SR actions.
  // The arena graph's finals are the decoys (P1's objective).
  Subgame arena;
  // AlmostSure mode only: P1 states decide, P2 states are nature.
  std::optional<MdpSkeleton> mdp;
  StateSet target;  // X ∪ Y in arena ids
  RationalizableActionMap sracts;
};

// Caches the base solve of one game so that many placements can be evaluated.
// Synthesis requires X ∪ Y ⊆ Win2(G, F) \ F and throws kDecoysOutsideWin2
// otherwise (after the checks of CheckPlacement).
class DeceptionAnalyzer {
 public:
  explicit DeceptionAnalyzer(const GameGraph& g);

  const GameGraph& game() const { return game_; }
  const SolveResult& base() const { return base_; }
  const StateSet& win2() const { return base_.win_reacher; }
  // Win2(G, F) \ F: the decoy domain and the VoD denominator.
  const StateSet& domain() const { return domain_; }

  void CheckSynthesisPlacement(const DecoyPlacement& p) const;

  HypergameModel Build(const DecoyPlacement& p, Mode mode) const;
  // DSWin (Sure) or DASWin (AlmostSure), in base ids.
  StateSet Region(const DecoyPlacement& p, Mode mode) const;
  // P1 supports in base ids on the region minus the decoys.
  StrategySupport Strategy(const DecoyPlacement& p, Mode mode) const;
  // Solves the hypergame of `p` with P1 target region_a ∪ region_b.
  StateSet Compose(const DecoyPlacement& p, const StateSet& region_a,
                   const StateSet& region_b, Mode mode) const;

 private:
  StateSet SolveModel(const HypergameModel& model, const StateSet& target) const;

  GameGraph game_;
  SolveResult base_;
  StateSet domain_;
};

HypergameModel BuildHypergame(const GameGraph& g, const DecoyPlacement& p,
                              Mode mode);
StateSet DSWin(const GameGraph& g, const DecoyPlacement& p);
StateSet DASWin(const GameGraph& g, const DecoyPlacement& p);
StrategySupport DeceptiveStrategy(const GameGraph& g, const DecoyPlacement& p,
                                  Mode mode);

// `p_base` is the combined placement whose arena is solved; the regions are
// outputs for placements whose union is `p_base`.
StateSet ComposeRegions(const GameGraph& g, const DecoyPlacement& p_base,
                        const StateSet& region_a, const StateSet& region_b,
                        Mode mode);
// Computes both regions and composes them in the union placement. Sure mode
// requires equal fake sets and throws kIncompatibleComposition otherwise.
StateSet ComposePlacements(const GameGraph& g, const DecoyPlacement& a,
                           const DecoyPlacement& b, Mode mode);

}  // namespace decoy

#endif  // DECOY_HYPERGAME_H_
