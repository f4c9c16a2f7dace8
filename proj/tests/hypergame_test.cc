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

#include "doctest.h"
#include "test_util.h"

namespace decoy {
namespace {

using testing::Act;
using testing::Counterexample7;
using testing::Id;
using testing::Place;
using testing::RunningExample;
using testing::Set;

std::vector<ActionId> Acts(const GameGraph& g, Player owner,
                           std::initializer_list<const char*> names) {
  std::vector<ActionId> out;
  for (const char* n : names) out.push_back(Act(g, n, owner));
  std::sort(out.begin(), out.end());
  return out;
}

TEST_CASE("mode names round-trip") {
  CHECK(ParseMode("sure") == Mode::kSure);
  CHECK(ParseMode(ModeName(Mode::kAlmostSure)) == Mode::kAlmostSure);
  CHECK_FALSE(ParseMode("maybe").has_value());
}

TEST_CASE("true and perceptual games for a fake at s7") {
  const GameGraph g = RunningExample();
  const DecoyPlacement p = Place(g, {}, {"s7"});
  const GameGraph truth = TrueGame(g, p);
  CHECK(truth.IsSink(Id(g, "s7")));
  CHECK(truth.finals() == g.finals());
  const SolveResult tr = Attractor(truth, truth.finals(), Player::kP2);
  CHECK(tr.win_opponent == Set(g, {"s7", "s8", "s9", "s10", "s11"}));

  const GameGraph perc = PerceptualGame(g, p);
  CHECK(perc.finals() == Set(g, {"s0", "s1", "s7"}));
  CHECK(perc.out(Id(g, "s7")).size() == g.out(Id(g, "s7")).size());
  const SolveResult pr = Attractor(perc, perc.finals(), Player::kP2);
  CHECK(pr.rank[Id(g, "s7")] == 0);
  for (const char* s : {"s2", "s3", "s4", "s5", "s8"}) CHECK(pr.rank[Id(g, s)] == 1);
  CHECK(pr.rank[Id(g, "s6")] == 2);
  CHECK(pr.rank[Id(g, "s9")] == 3);
}

TEST_CASE("placement checks") {
  const GameGraph g = RunningExample();
  CHECK_THROWS_AS(CheckPlacement(g, Place(g, {"s7"}, {"s7"})), DecoyError);
  CHECK_THROWS_AS(CheckPlacement(g, Place(g, {"s0"}, {})), DecoyError);
  CHECK_THROWS_AS(CheckPlacement(g, DecoyPlacement{{99}, {}}), DecoyError);
  CHECK_NOTHROW(CheckPlacement(g, Place(g, {"s10"}, {"s7"})));
  const DeceptionAnalyzer an(g);
  try {
    an.CheckSynthesisPlacement(Place(g, {}, {"s10"}));
    FAIL("expected DecoysOutsideWin2");
  } catch (const DecoyError& e) {
    CHECK(e.code() == ErrorCode::kDecoysOutsideWin2);
  }
  CHECK(an.domain() == Set(g, {"s2", "s3", "s4", "s5", "s6", "s7", "s8", "s9"}));
}

TEST_CASE("rationalizable actions with a fake at s7") {
  const GameGraph g = RunningExample();
  const DecoyPlacement p = Place(g, {}, {"s7"});
  const auto sure = RationalizableActions(g, p, Mode::kSure);
  CHECK(sure.sracts[Id(g, "s5")] == Acts(g, Player::kP2, {"b1"}));
  CHECK(sure.sracts[Id(g, "s2")] == Acts(g, Player::kP2, {"b2"}));
  CHECK(sure.sracts[Id(g, "s8")] == Acts(g, Player::kP2, {"b1"}));
  CHECK(sure.sracts[Id(g, "s6")] == Acts(g, Player::kP2, {"b1", "b2"}));
  CHECK(sure.Allows(Id(g, "s9"), Act(g, "a2", Player::kP1)));
  CHECK_FALSE(sure.Allows(Id(g, "s5"), Act(g, "b2", Player::kP2)));

  const auto as = RationalizableActions(g, p, Mode::kAlmostSure);
  CHECK(as.sracts[Id(g, "s5")] == Acts(g, Player::kP2, {"b1", "b2"}));
  CHECK(as.sracts[Id(g, "s11")].size() == g.out(Id(g, "s11")).size());
}

TEST_CASE("base-game rationalizable action at s5 is b2") {
  const GameGraph g = RunningExample();
  const auto sure = RationalizableActions(g, {}, Mode::kSure);
  CHECK(sure.sracts[Id(g, "s5")] == Acts(g, Player::kP2, {"b2"}));
}

TEST_CASE("deceptive regions on the running example") {
  const GameGraph g = RunningExample();
  CHECK(DSWin(g, Place(g, {}, {"s7"})) == Set(g, {"s5", "s7", "s8", "s9"}));
  CHECK(DSWin(g, Place(g, {"s7"}, {})) == Set(g, {"s7", "s8", "s9"}));
  CHECK(DASWin(g, Place(g, {}, {"s7"})) == Set(g, {"s7", "s8", "s9"}));
  CHECK(DASWin(g, Place(g, {"s7"}, {})) == Set(g, {"s7", "s8", "s9"}));
  CHECK(DSWin(g, {}).empty());
  CHECK(DSWin(g, Place(g, {}, {"s2", "s7"})) ==
        Set(g, {"s2", "s5", "s7", "s8", "s9"}));
  for (const char* s : {"s2", "s3", "s4"})
    CHECK(DSWin(g, Place(g, {}, {s})).count() == 5);
}

TEST_CASE("almost-sure model for a fake at s7") {
  const GameGraph g = RunningExample();
  const HypergameModel m = BuildHypergame(g, Place(g, {}, {"s7"}), Mode::kAlmostSure);
  REQUIRE(m.mdp.has_value());
  const StateId s8 = m.arena.from_base[Id(g, "s8")];
  std::vector<StateId> succ_base;
  for (StateId t : m.mdp->nature_successors[s8]) succ_base.push_back(m.arena.to_base[t]);
  std::sort(succ_base.begin(), succ_base.end());
  CHECK(succ_base == testing::Ids(g, {"s7", "s8"}));
  CHECK(m.arena.to_base.size() == 10);
  CHECK(m.target.count() == 1);
  CHECK_FALSE(BuildHypergame(g, Place(g, {}, {"s7"}), Mode::kSure).mdp.has_value());
}

TEST_CASE("counterexample regions") {
  const GameGraph g = Counterexample7();
  const DecoyPlacement p = Place(g, {"s1"}, {"s2"});
  CHECK(DSWin(g, p) == Set(g, {"s1", "s2", "s4"}));
  CHECK(DASWin(g, p) == Set(g, {"s1", "s2"}));
}

TEST_CASE("strategies are rationalizable and stay in the region") {
  const GameGraph g = RunningExample();
  const DecoyPlacement p = Place(g, {}, {"s7"});
  for (Mode mode : {Mode::kSure, Mode::kAlmostSure}) {
    const DeceptionAnalyzer an(g);
    const StateSet region = an.Region(p, mode);
    const auto sr = RationalizableActions(g, p, mode);
    const auto strat = an.Strategy(p, mode);
    for (const auto& [s, acts] : strat) {
      CHECK(region.contains(s));
      CHECK(g.owner(s) == Player::kP1);
      CHECK_FALSE(acts.empty());
      for (ActionId a : acts) {
        CHECK(sr.Allows(s, a));
        CHECK(region.contains(*g.Successor(s, a)));
      }
    }
  }
  const auto strat = DeceptiveStrategy(g, p, Mode::kSure);
  CHECK(strat.at(Id(g, "s9")) == Acts(g, Player::kP1, {"a1"}));
}

TEST_CASE("composition matches monolithic recomputation") {
  const GameGraph g = RunningExample();
  const DecoyPlacement both = Place(g, {}, {"s2", "s7"});
  const StateSet ra = DSWin(g, Place(g, {}, {"s2"}));
  const StateSet rb = DSWin(g, Place(g, {}, {"s7"}));
  const StateSet composed = ComposeRegions(g, both, ra, rb, Mode::kSure);
  CHECK(composed == DSWin(g, both));
  CHECK((ra | rb).IsSubsetOf(composed));

  const DecoyPlacement fake = Place(g, {}, {"s7"});
  CHECK(ComposeRegions(g, fake, rb, StateSet(g.num_states()), Mode::kSure) == rb);

  CHECK(ComposePlacements(g, Place(g, {"s2"}, {}), Place(g, {"s7"}, {}), Mode::kSure) ==
        DSWin(g, Place(g, {"s2", "s7"}, {})));
  try {
    ComposePlacements(g, Place(g, {}, {"s2"}), Place(g, {}, {"s7"}), Mode::kSure);
    FAIL("expected IncompatibleComposition");
  } catch (const DecoyError& e) {
    CHECK(e.code() == ErrorCode::kIncompatibleComposition);
  }
}

TEST_CASE("true-game Win1 can exceed the attractor to the decoys") {
  // s (P2) chooses d or c; c (P1) returns to s; d leads to f. With a trap at
  // d, P2 never reaches f, yet only d is attracted to the trap in the true
  // game. Rationalizable play drops y at s, so the deceptive region is larger.
  GameGraph g;
  const StateId s = g.AddState(Player::kP2, "s");
  const StateId c = g.AddState(Player::kP1, "c");
  const StateId d = g.AddState(Player::kP1, "d");
  const StateId f = g.AddState(Player::kP2, "f");
  const ActionId x = g.AddAction(Player::kP2, "x");
  const ActionId y = g.AddAction(Player::kP2, "y");
  const ActionId go = g.AddAction(Player::kP1, "go");
  g.AddTransition(s, x, d);
  g.AddTransition(s, y, c);
  g.AddTransition(c, go, s);
  g.AddTransition(d, go, f);
  g.AddTransition(f, x, f);
  g.AddFinal(f);
  const DecoyPlacement trap{{d}, {}};
  const GameGraph truth = TrueGame(g, trap);
  const StateSet win1 = Attractor(truth, truth.finals(), Player::kP2).win_opponent;
  CHECK(win1 == StateSet(4, {s, c, d}));
  CHECK(SureOracle(truth, truth.finals(), Player::kP2) == StateSet(4, {f}));
  const StateSet domain = Attractor(g, g.finals(), Player::kP2).win_reacher;
  const Subgame sub = RestrictToStates(truth, domain);
  const StateSet attr = sub.ToBase(
      Attractor(sub.graph, sub.FromBase(StateSet(4, {d})), Player::kP1).win_reacher, 4);
  CHECK(attr == StateSet(4, {d}));
  CHECK(DSWin(g, trap) == StateSet(4, {s, c, d}));
}

TEST_CASE("mode relations on random games") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const GameGraph g = testing::SmallRandomGame(seed + 300, 30, 3);
    const DeceptionAnalyzer an(g);
    for (StateId z : an.domain().ToVector()) {
      const DecoyPlacement trap{{z}, {}}, fake{{}, {z}};
      const StateSet st = an.Region(trap, Mode::kSure);
      const StateSet sf = an.Region(fake, Mode::kSure);
      CHECK(st.IsSubsetOf(sf));
      CHECK(an.Region(trap, Mode::kAlmostSure) == an.Region(fake, Mode::kAlmostSure));
      CHECK(an.Region(fake, Mode::kAlmostSure).IsSubsetOf(sf));
      CHECK(sf.contains(z));
    }
  }
}

}  // namespace
}  // namespace decoy
