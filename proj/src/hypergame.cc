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

#include "decoy/hypergame.h"

#include <algorithm>

#include "decoy/errors.h"

namespace decoy {

const char* ModeName(Mode mode) {
  return mode == Mode::kSure ? "sure" : "almost-sure";
}

std::optional<Mode> ParseMode(std::string_view text) {
  if (text == "sure") return Mode::kSure;
  if (text == "almost-sure" || text == "almost_sure" || text == "as")
    return Mode::kAlmostSure;
  return std::nullopt;
}

namespace {

StateSet CheckedSet(const GameGraph& g, const std::vector<StateId>& ids,
                    const char* what) {
  StateSet out(g.num_states());
  for (StateId s : ids) {
    if (!g.HasState(s)) {
      throw DecoyError(ErrorCode::kUnknownState,
                       std::string(what) + " state #" + std::to_string(s) +
                           " is not in the game");
    }
    out.insert(s);
  }
  return out;
}

std::string Labels(const GameGraph& g, const StateSet& set) {
  std::string out;
  set.ForEach([&](StateId s) {
    if (!out.empty()) out += ",";
    out += g.StateLabel(s);
  });
  return out;
}

}  // namespace

void CheckPlacement(const GameGraph& g, const DecoyPlacement& p) {
  const StateSet traps = CheckedSet(g, p.traps, "trap");
  const StateSet fakes = CheckedSet(g, p.fakes, "fake");
  if (traps.Intersects(fakes)) {
    throw DecoyError(ErrorCode::kTrapFakeOverlap,
                     "states used as trap and fake: " +
                         Labels(g, traps & fakes));
  }
  const StateSet decoys = traps | fakes;
  if (decoys.Intersects(g.finals())) {
    throw DecoyError(ErrorCode::kPlacementOverlapsFinals,
                     "decoys on final states: " +
                         Labels(g, decoys & g.finals()));
  }
}

StateSet TrapSet(const GameGraph& g, const DecoyPlacement& p) {
  return CheckedSet(g, p.traps, "trap");
}

StateSet FakeSet(const GameGraph& g, const DecoyPlacement& p) {
  return CheckedSet(g, p.fakes, "fake");
}

StateSet DecoySet(const GameGraph& g, const DecoyPlacement& p) {
  return TrapSet(g, p) | FakeSet(g, p);
}

GameGraph TrueGame(const GameGraph& g, const DecoyPlacement& p) {
  CheckPlacement(g, p);
  GameGraph out = g;
  DecoySet(g, p).ForEach([&](StateId s) { out.MakeSink(s); });
  return out;
}

GameGraph PerceptualGame(const GameGraph& g, const DecoyPlacement& p) {
  CheckPlacement(g, p);
  GameGraph out = g;
  out.SetFinals(g.finals() | FakeSet(g, p));
  return out;
}

bool RationalizableActionMap::Allows(StateId s, ActionId a) const {
  const auto& acts = sracts.at(s);
  return std::binary_search(acts.begin(), acts.end(), a);
}

namespace {

RationalizableActionMap SrFromPerceptual(const GameGraph& g,
                                         const SolveResult& perceptual,
                                         Mode mode) {
  RationalizableActionMap map;
  map.mode = mode;
  map.sracts.resize(g.num_states());
  const StateSet restricted = perceptual.win_reacher - perceptual.target;
  for (StateId s = 0; s < g.num_states(); ++s) {
    auto& acts = map.sracts[s];
    const bool restrict = g.owner(s) == Player::kP2 && restricted.contains(s);
    for (const Edge& e : g.out(s)) {
      if (restrict) {
        const bool keep = mode == Mode::kSure
                              ? perceptual.rank[e.to] < perceptual.rank[s]
                              : perceptual.win_reacher.contains(e.to);
        if (!keep) continue;
      }
      acts.push_back(e.action);
    }
    std::sort(acts.begin(), acts.end());
    acts.erase(std::unique(acts.begin(), acts.end()), acts.end());
  }
  return map;
}

}  // namespace

RationalizableActionMap RationalizableActions(const GameGraph& g,
                                              const DecoyPlacement& p,
                                              Mode mode) {
  CheckPlacement(g, p);
  const SolveResult perceptual =
      Attractor(g, g.finals() | FakeSet(g, p), Player::kP2);
  return SrFromPerceptual(g, perceptual, mode);
}

// ---------------------------------------------------------------------------
// DeceptionAnalyzer

DeceptionAnalyzer::DeceptionAnalyzer(const GameGraph& g)
    : game_(g), base_(Attractor(g, g.finals(), Player::kP2)) {
  domain_ = base_.win_reacher - g.finals();
}

void DeceptionAnalyzer::CheckSynthesisPlacement(const DecoyPlacement& p) const {
  CheckPlacement(game_, p);
  const StateSet decoys = DecoySet(game_, p);
  if (!decoys.IsSubsetOf(domain_)) {
    throw DecoyError(ErrorCode::kDecoysOutsideWin2,
                     "decoys outside Win2 \\ F: " +
                         Labels(game_, decoys - domain_));
  }
}

HypergameModel DeceptionAnalyzer::Build(const DecoyPlacement& p,
                                        Mode mode) const {
  CheckSynthesisPlacement(p);
  const StateSet fakes = FakeSet(game_, p);
  const StateSet decoys = DecoySet(game_, p);
  const SolveResult perceptual =
      Attractor(game_, game_.finals() | fakes, Player::kP2);

  HypergameModel model;
  model.mode = mode;
  model.sracts = SrFromPerceptual(game_, perceptual, mode);

  GameGraph filtered = game_;
  for (StateId s = 0; s < game_.num_states(); ++s) {
    if (game_.owner(s) != Player::kP2) continue;
    std::vector<Edge> kept;
    for (const Edge& e : game_.out(s))
      if (model.sracts.Allows(s, e.action)) kept.push_back(e);
    filtered.SetTransitions(s, std::move(kept));
  }
  decoys.ForEach([&](StateId s) {
    std::vector<Edge> loops;
    for (const Edge& e : game_.out(s)) loops.push_back({e.action, s});
    filtered.SetTransitions(s, std::move(loops));
  });
  filtered.SetFinals(decoys);

  model.arena = RestrictToStates(filtered, base_.win_reacher);
  model.target = model.arena.FromBase(decoys);
  if (mode == Mode::kAlmostSure)
    model.mdp = SkeletonFromGame(model.arena.graph, Player::kP2, model.target);
  return model;
}

StateSet DeceptionAnalyzer::SolveModel(const HypergameModel& model,
                                       const StateSet& target) const {
  StateSet local(model.arena.graph.num_states());
  if (model.mode == Mode::kSure) {
    local = Attractor(model.arena.graph, target, Player::kP1).win_reacher;
  } else {
    MdpSkeleton mdp = *model.mdp;
    mdp.target = target;
    local = AlmostSureReach(mdp);
  }
  return model.arena.ToBase(local, game_.num_states());
}

StateSet DeceptionAnalyzer::Region(const DecoyPlacement& p, Mode mode) const {
  const HypergameModel model = Build(p, mode);
  return SolveModel(model, model.target);
}

StrategySupport DeceptionAnalyzer::Strategy(const DecoyPlacement& p,
                                            Mode mode) const {
  const HypergameModel model = Build(p, mode);
  const GameGraph& arena = model.arena.graph;
  StrategySupport local;
  if (mode == Mode::kSure) {
    local = GreedyReacherSupports(
        Attractor(arena, model.target, Player::kP1), arena);
  } else {
    const StateSet region = AlmostSureReach(*model.mdp);
    (region - model.target).ForEach([&](StateId s) {
      if (arena.owner(s) != Player::kP1) return;
      std::vector<ActionId> acts;
      for (const Edge& e : arena.out(s))
        if (region.contains(e.to)) acts.push_back(e.action);
      std::sort(acts.begin(), acts.end());
      acts.erase(std::unique(acts.begin(), acts.end()), acts.end());
      if (!acts.empty()) local[s] = std::move(acts);
    });
  }
  StrategySupport out;
  for (auto& [s, acts] : local) out[model.arena.to_base[s]] = std::move(acts);
  return out;
}

StateSet DeceptionAnalyzer::Compose(const DecoyPlacement& p,
                                    const StateSet& region_a,
                                    const StateSet& region_b, Mode mode) const {
  const std::size_t n = game_.num_states();
  if (region_a.universe() != n || region_b.universe() != n) {
    throw DecoyError(ErrorCode::kUnknownState, "region universe mismatch");
  }
  const StateSet joint = region_a | region_b;
  if (!joint.IsSubsetOf(domain_)) {
    throw DecoyError(ErrorCode::kDecoysOutsideWin2,
                     "regions leave Win2 \\ F: " + Labels(game_, joint - domain_));
  }
  const HypergameModel model = Build(p, mode);
  return SolveModel(model, model.arena.FromBase(joint));
}

// ---------------------------------------------------------------------------
// Free functions

HypergameModel BuildHypergame(const GameGraph& g, const DecoyPlacement& p,
                              Mode mode) {
  return DeceptionAnalyzer(g).Build(p, mode);
}

StateSet DSWin(const GameGraph& g, const DecoyPlacement& p) {
  return DeceptionAnalyzer(g).Region(p, Mode::kSure);
}

StateSet DASWin(const GameGraph& g, const DecoyPlacement& p) {
  return DeceptionAnalyzer(g).Region(p, Mode::kAlmostSure);
}

StrategySupport DeceptiveStrategy(const GameGraph& g, const DecoyPlacement& p,
                                  Mode mode) {
  return DeceptionAnalyzer(g).Strategy(p, mode);
}

StateSet ComposeRegions(const GameGraph& g, const DecoyPlacement& p_base,
                        const StateSet& region_a, const StateSet& region_b,
                        Mode mode) {
  return DeceptionAnalyzer(g).Compose(p_base, region_a, region_b, mode);
}

StateSet ComposePlacements(const GameGraph& g, const DecoyPlacement& a,
                           const DecoyPlacement& b, Mode mode) {
  const DeceptionAnalyzer analyzer(g);
  if (mode == Mode::kSure && FakeSet(g, a) != FakeSet(g, b)) {
    throw DecoyError(ErrorCode::kIncompatibleComposition,
                     "sure-mode composition needs equal fake sets");
  }
  DecoyPlacement joint;
  const StateSet traps = TrapSet(g, a) | TrapSet(g, b);
  const StateSet fakes = FakeSet(g, a) | FakeSet(g, b);
  joint.traps = traps.ToVector();
  joint.fakes = fakes.ToVector();
  return analyzer.Compose(joint, analyzer.Region(a, mode),
                          analyzer.Region(b, mode), mode);
}

}  // namespace decoy
