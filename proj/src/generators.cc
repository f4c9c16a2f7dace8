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

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "decoy/errors.h"
#include "decoy/solver.h"

namespace decoy {
namespace {

std::string CellText(Cell c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

bool InBounds(const GridworldConfig& cfg, Cell c) {
  return c.row >= 0 && c.col >= 0 && c.row < cfg.rows && c.col < cfg.cols;
}

struct Board {
  std::vector<Cell> free;        // row-major
  std::vector<int> index;        // row * cols + col -> free index or -1
  std::set<Cell> cheese;
  int cols = 0;

  int IndexOf(Cell c) const { return index[c.row * cols + c.col]; }
};

Board MakeBoard(const GridworldConfig& cfg) {
  Board b;
  b.cols = cfg.cols;
  b.index.assign(static_cast<std::size_t>(cfg.rows * cfg.cols), -1);
  const std::set<Cell> blocked(cfg.obstacles.begin(), cfg.obstacles.end());
  b.cheese.insert(cfg.cheese.begin(), cfg.cheese.end());
  for (int r = 0; r < cfg.rows; ++r) {
    for (int c = 0; c < cfg.cols; ++c) {
      if (blocked.count({r, c})) continue;
      b.index[r * cfg.cols + c] = static_cast<int>(b.free.size());
      b.free.push_back({r, c});
    }
  }
  return b;
}

constexpr int kDr[4] = {-1, 0, 1, 0};
constexpr int kDc[4] = {0, 1, 0, -1};
constexpr const char* kMoveNames[4] = {"N", "E", "S", "W"};

Cell Move(const GridworldConfig& cfg, const Board& b, Cell from, int dir) {
  const Cell to{from.row + kDr[dir], from.col + kDc[dir]};
  if (!InBounds(cfg, to) || b.IndexOf(to) < 0) return from;
  return to;
}

std::string StateName(Cell cat, Cell mouse, Player turn) {
  return "c" + std::to_string(cat.row) + "." + std::to_string(cat.col) + "_m" +
         std::to_string(mouse.row) + "." + std::to_string(mouse.col) +
         (turn == Player::kP1 ? "_t1" : "_t2");
}

}  // namespace

void CheckGridworldConfig(const GridworldConfig& cfg) {
  if (cfg.rows <= 0 || cfg.cols <= 0) {
    throw DecoyError(ErrorCode::kInvalidConfig, "grid must have positive size");
  }
  const std::set<Cell> blocked(cfg.obstacles.begin(), cfg.obstacles.end());
  for (Cell c : cfg.obstacles)
    if (!InBounds(cfg, c))
      throw DecoyError(ErrorCode::kInvalidConfig,
                       "obstacle " + CellText(c) + " out of bounds");
  for (Cell c : cfg.cheese) {
    if (!InBounds(cfg, c))
      throw DecoyError(ErrorCode::kInvalidConfig,
                       "cheese " + CellText(c) + " out of bounds");
    if (blocked.count(c))
      throw DecoyError(ErrorCode::kInvalidConfig,
                       "cheese " + CellText(c) + " on an obstacle");
  }
  if (blocked.size() >= static_cast<std::size_t>(cfg.rows * cfg.cols)) {
    throw DecoyError(ErrorCode::kInvalidConfig, "no free cell");
  }
  const std::set<Cell> cheese(cfg.cheese.begin(), cfg.cheese.end());
  auto check_start = [&](const std::optional<Cell>& c, const char* who) {
    if (!c) return;
    if (!InBounds(cfg, *c) || blocked.count(*c))
      throw DecoyError(ErrorCode::kInvalidConfig,
                       std::string(who) + " start " + CellText(*c) +
                           " is not a free cell");
  };
  check_start(cfg.cat_start, "cat");
  check_start(cfg.mouse_start, "mouse");
  if (cfg.mouse_start && cheese.count(*cfg.mouse_start))
    throw DecoyError(ErrorCode::kInvalidConfig, "mouse may not start on cheese");
  if (cfg.cat_start && cfg.mouse_start && *cfg.cat_start == *cfg.mouse_start)
    throw DecoyError(ErrorCode::kInvalidConfig, "cat and mouse start together");
}

StateId Gridworld::StateOf(Cell cat, Cell mouse, Player turn) const {
  const auto name = StateName(cat, mouse, turn);
  auto id = game.FindState(name);
  if (!id) throw DecoyError(ErrorCode::kUnknownState, name);
  return *id;
}

std::vector<CandidateGroup> Gridworld::CandidatePool(
    std::vector<std::size_t>* cell_index) const {
  std::vector<CandidateGroup> out;
  if (cell_index) cell_index->clear();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].group.members.empty()) continue;
    out.push_back(cells[i].group);
    if (cell_index) cell_index->push_back(i);
  }
  return out;
}

Gridworld MakeGridworld(const GridworldConfig& cfg) {
  CheckGridworldConfig(cfg);
  Gridworld world;
  world.config = cfg;
  GameGraph& g = world.game;
  const Board board = MakeBoard(cfg);
  const std::size_t c = board.free.size();

  ActionId cat_moves[4], mouse_moves[4];
  for (int d = 0; d < 4; ++d)
    cat_moves[d] = g.AddAction(Player::kP1, std::string("cat_") + kMoveNames[d]);
  for (int d = 0; d < 4; ++d)
    mouse_moves[d] =
        g.AddAction(Player::kP2, std::string("mouse_") + kMoveNames[d]);

  // id = ((cat * c) + mouse) * 2 + (turn == P2)
  auto id_of = [c](std::size_t cat, std::size_t mouse, Player turn) {
    return static_cast<StateId>((cat * c + mouse) * 2 +
                                (turn == Player::kP2 ? 1 : 0));
  };
  for (std::size_t ci = 0; ci < c; ++ci)
    for (std::size_t mi = 0; mi < c; ++mi)
      for (Player turn : {Player::kP1, Player::kP2})
        g.AddState(turn, StateName(board.free[ci], board.free[mi], turn));

  StateSet finals(g.num_states());
  for (std::size_t ci = 0; ci < c; ++ci) {
    for (std::size_t mi = 0; mi < c; ++mi) {
      const Cell cat = board.free[ci], mouse = board.free[mi];
      const bool captured = ci == mi;
      const bool on_cheese = !captured && board.cheese.count(mouse) > 0;
      for (Player turn : {Player::kP1, Player::kP2}) {
        const StateId s = id_of(ci, mi, turn);
        const ActionId* moves = turn == Player::kP1 ? cat_moves : mouse_moves;
        for (int d = 0; d < 4; ++d) {
          StateId to = s;
          if (!captured && !on_cheese) {
            if (turn == Player::kP1) {
              to = id_of(static_cast<std::size_t>(
                             board.IndexOf(Move(cfg, board, cat, d))),
                         mi, Player::kP2);
            } else {
              to = id_of(ci,
                         static_cast<std::size_t>(
                             board.IndexOf(Move(cfg, board, mouse, d))),
                         Player::kP1);
            }
          }
          g.AddTransition(s, moves[d], to);
        }
        if (on_cheese) finals.insert(s);
      }
    }
  }
  g.SetFinals(finals);

  const Player first = cfg.mouse_first ? Player::kP2 : Player::kP1;
  std::optional<StateId> initial;
  for (std::size_t ci = 0; ci < c && !initial; ++ci) {
    if (cfg.cat_start && board.free[ci] != *cfg.cat_start) continue;
    for (std::size_t mi = 0; mi < c; ++mi) {
      if (cfg.mouse_start && board.free[mi] != *cfg.mouse_start) continue;
      if (ci == mi || board.cheese.count(board.free[mi])) continue;
      initial = id_of(ci, mi, first);
      break;
    }
  }
  if (!initial) {
    throw DecoyError(ErrorCode::kInvalidConfig,
                     "no admissible initial state (need two free cells and a "
                     "non-cheese mouse cell)");
  }
  g.SetInitial(*initial);

  const SolveResult base = Attractor(g, g.finals(), Player::kP2);
  const StateSet domain = base.win_reacher - g.finals();
  for (std::size_t mi = 0; mi < c; ++mi) {
    const Cell cell = board.free[mi];
    if (board.cheese.count(cell)) continue;
    CellGroup group;
    group.cell = cell;
    group.group.name = CellText(cell);
    for (std::size_t ci = 0; ci < c; ++ci) {
      if (ci == mi) continue;
      for (Player turn : {Player::kP1, Player::kP2}) {
        const StateId s = id_of(ci, mi, turn);
        if (domain.contains(s)) group.group.members.push_back(s);
      }
    }
    std::sort(group.group.members.begin(), group.group.members.end());
    world.cells.push_back(std::move(group));
  }
  return world;
}

GameGraph RandomGame(const RandomGameParams& params) {
  const std::size_t n = params.n_states;
  const std::size_t n_finals =
      params.n_finals.value_or(std::max<std::size_t>(1, n / 30));
  if (n == 0) throw DecoyError(ErrorCode::kInvalidParams, "n_states must be >= 1");
  if (params.n_p1 > n)
    throw DecoyError(ErrorCode::kInvalidParams, "n_p1 exceeds n_states");
  if (params.max_actions < 1)
    throw DecoyError(ErrorCode::kInvalidParams, "max_actions must be >= 1");
  if (n_finals > n)
    throw DecoyError(ErrorCode::kInvalidParams, "n_finals exceeds n_states");

  std::mt19937_64 rng(params.seed);
  GameGraph g;
  std::vector<ActionId> p1_actions, p2_actions;
  for (std::size_t i = 0; i < params.max_actions; ++i) {
    p1_actions.push_back(g.AddAction(Player::kP1, "a" + std::to_string(i)));
    p2_actions.push_back(g.AddAction(Player::kP2, "b" + std::to_string(i)));
  }
  for (std::size_t s = 0; s < n; ++s)
    g.AddState(s < params.n_p1 ? Player::kP1 : Player::kP2,
               "s" + std::to_string(s));

  std::vector<StateId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  StateSet finals(n);
  for (std::size_t i = 0; i < n_finals; ++i) finals.insert(order[i]);

  std::uniform_int_distribution<std::size_t> degree(1, params.max_actions);
  std::uniform_int_distribution<StateId> target(0, static_cast<StateId>(n - 1));
  for (StateId s = 0; s < n; ++s) {
    const auto& pool = g.owner(s) == Player::kP1 ? p1_actions : p2_actions;
    if (finals.contains(s)) {
      g.AddTransition(s, pool[0], s);
      continue;
    }
    std::vector<ActionId> acts = pool;
    std::shuffle(acts.begin(), acts.end(), rng);
    acts.resize(degree(rng));
    std::sort(acts.begin(), acts.end());
    for (ActionId a : acts) g.AddTransition(s, a, target(rng));
  }
  g.SetFinals(finals);
  StateId initial = 0;
  while (initial + 1 < n && finals.contains(initial)) ++initial;
  g.SetInitial(initial);
  return g;
}

}  // namespace decoy
