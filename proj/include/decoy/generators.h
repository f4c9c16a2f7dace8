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

#ifndef DECOY_GENERATORS_H_
#define DECOY_GENERATORS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "decoy/game.h"
#include "decoy/placement.h"

namespace decoy {

struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Cat (P1) chases mouse (P2) on a grid. The mouse wins by reaching cheese.
struct GridworldConfig {
  int rows = 7;
  int cols = 7;
  std::vector<Cell> obstacles;
  std::vector<Cell> cheese;
  bool mouse_first = true;
  // Initial positions; defaults to the first admissible (cat, mouse) pair in
  // row-major order.
  std::optional<Cell> cat_start;
  std::optional<Cell> mouse_start;
};

// Throws kInvalidConfig on out-of-bounds cells, cheese on obstacles, empty
// boards or inadmissible start positions.
void CheckGridworldConfig(const GridworldConfig& cfg);

struct CellGroup {
  Cell cell;
  // Mouse-at-cell states without co-location that lie in Win2 \ F. May be
  // empty, in which case the cell cannot host a decoy.
  CandidateGroup group;
};

struct Gridworld {
  GridworldConfig config;
  GameGraph game;
  // Every free non-cheese cell, row-major.
  std::vector<CellGroup> cells;

  StateId StateOf(Cell cat, Cell mouse, Player turn) const;
  // Non-empty groups in row-major order, with their index into `cells`.
  std::vector<CandidateGroup> CandidatePool(
      std::vector<std::size_t>* cell_index = nullptr) const;
};

// One state per (cat cell, mouse cell, turn) over free cells, four moves
// (N, E, S, W) per player. Blocked moves stay in place. Capture states and
// cheese states (the finals) are sinks.
Gridworld MakeGridworld(const GridworldConfig& cfg);

struct RandomGameParams {
  std::size_t n_states = 150;
  std::size_t n_p1 = 75;
  std::size_t max_actions = 5;
  // Defaults to max(1, n_states / 30).
  std::optional<std::size_t> n_finals;
  std::uint64_t seed = 0;
};

// Seeded random arena: the first n_p1 states belong to P1; sampled finals
// become single self-loop sinks; every other state gets 1..max_actions
// distinct actions with uniformly chosen successors.
// Throws kInvalidParams on inconsistent sizes.
GameGraph RandomGame(const RandomGameParams& params);

}  // namespace decoy

#endif  // DECOY_GENERATORS_H_
