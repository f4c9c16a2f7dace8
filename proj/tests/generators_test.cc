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

#include "decoy/generators.h"

#include "doctest.h"
#include "test_util.h"

namespace decoy {
namespace {

GridworldConfig SevenBySeven() {
  GridworldConfig cfg;
  cfg.obstacles = {{2, 2}, {2, 3}, {4, 2}, {5, 4}};
  cfg.cheese = {{1, 6}, {4, 6}};
  return cfg;
}

TEST_CASE("7x7 board with 4 obstacles and 2 cheese") {
  const Gridworld w = MakeGridworld(SevenBySeven());
  CHECK(w.game.num_states() == 4050);
  CHECK(w.game.num_transitions() == 16200);
  CHECK(ValidateGame(w.game).empty());
  CHECK(w.cells.size() == 43);
}

TEST_CASE("1x2 board") {
  GridworldConfig cfg;
  cfg.rows = 1;
  cfg.cols = 2;
  cfg.cheese = {{0, 1}};
  const Gridworld w = MakeGridworld(cfg);
  CHECK(w.game.num_states() == 8);
  CHECK(w.game.num_transitions() == 32);
  const StateId s = w.StateOf({0, 1}, {0, 0}, Player::kP2);
  CHECK(w.game.owner(s) == Player::kP2);
  // North off the edge keeps the mouse in place.
  const auto north = w.game.FindAction("mouse_N", Player::kP2);
  REQUIRE(north.has_value());
  CHECK(w.game.Successor(s, *north) == w.StateOf({0, 1}, {0, 0}, Player::kP1));
  const auto east = w.game.FindAction("mouse_E", Player::kP2);
  // Moving onto the cat is a capture.
  CHECK(w.game.IsSink(*w.game.Successor(s, *east)));
  CHECK(w.game.finals() ==
        StateSet(8, {w.StateOf({0, 0}, {0, 1}, Player::kP1),
                     w.StateOf({0, 0}, {0, 1}, Player::kP2)}));
}

TEST_CASE("sinks and candidate cells") {
  const Gridworld w = MakeGridworld(SevenBySeven());
  const GameGraph& g = w.game;
  for (StateId s = 0; s < g.num_states(); ++s) {
    const std::string& name = g.state_name(s);
    const bool capture = name.substr(1, name.find('_') - 1) ==
                         name.substr(name.find("_m") + 2, name.rfind('_') - name.find("_m") - 2);
    if (capture || g.finals().contains(s)) CHECK(g.IsSink(s));
  }
  const DeceptionAnalyzer an(g);
  for (const CellGroup& c : w.cells) {
    for (const Cell& x : w.config.cheese) CHECK(c.cell != x);
    for (const Cell& x : w.config.obstacles) CHECK(c.cell != x);
    for (StateId s : c.group.members) CHECK(an.domain().contains(s));
  }
  std::vector<std::size_t> idx;
  const auto pool = w.CandidatePool(&idx);
  CHECK(pool.size() == idx.size());
  CHECK_NOTHROW(CheckCandidates(an, pool));
  CHECK(ValidateGame(g).empty());
  CHECK(w.game.initial() < g.num_states());
  CHECK_FALSE(g.finals().contains(g.initial()));
}

TEST_CASE("invalid gridworld configs") {
  GridworldConfig cfg = SevenBySeven();
  cfg.cheese.push_back({7, 0});
  CHECK_THROWS_AS(MakeGridworld(cfg), DecoyError);
  cfg = SevenBySeven();
  cfg.obstacles.push_back({1, 6});
  CHECK_THROWS_AS(MakeGridworld(cfg), DecoyError);
  cfg = SevenBySeven();
  cfg.rows = 0;
  CHECK_THROWS_AS(MakeGridworld(cfg), DecoyError);
  cfg = SevenBySeven();
  cfg.obstacles.push_back({9, 9});
  CHECK_THROWS_AS(MakeGridworld(cfg), DecoyError);
}

TEST_CASE("random games are reproducible and well formed") {
  const GameGraph a = RandomGame({});
  const GameGraph b = RandomGame({});
  CHECK(a == b);
  CHECK(a.num_states() == 150);
  CHECK(a.StatesOf(Player::kP1).count() == 75);
  CHECK(a.finals().count() == 5);
  CHECK(ValidateGame(a).empty());
  for (StateId s = 0; s < a.num_states(); ++s) {
    CHECK(a.out(s).size() >= 1);
    CHECK(a.out(s).size() <= 5);
  }
  RandomGameParams p;
  p.seed = 1;
  CHECK_FALSE(RandomGame(p) == a);
}

TEST_CASE("invalid random parameters") {
  CHECK_THROWS_AS(RandomGame({.n_states = 5, .n_p1 = 6}), DecoyError);
  CHECK_THROWS_AS(RandomGame({.n_states = 5, .n_p1 = 2, .max_actions = 0}),
                  DecoyError);
  CHECK_THROWS_AS(RandomGame({.n_states = 5, .n_p1 = 2, .max_actions = 2, .n_finals = 6}),
                  DecoyError);
}

}  // namespace
}  // namespace decoy
