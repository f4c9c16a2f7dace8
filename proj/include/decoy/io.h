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

// JSON game documents and result emission.
//
// Game document (version 1):
//   {
//     "version": 1,
//     "states":  [{"id": 0, "name": "s0", "owner": "P2"}, ...],
//     "actions": [{"id": 0, "name": "top", "owner": "P1"}, ...],
//     "transitions": [{"from": 2, "action": 3, "to": 0}, ...],
//     "initial": 9,
//     "finals": [0, 1],
//     "grid": {...},                      // optional gridworld config
//     "candidate_groups": [               // optional decoy candidates
//       {"name": "(1,2)", "members": [4, 5], "cell": [1, 2]}, ...]
//   }
// State and action references may be ids or names. Ids must be 0..n-1 in
// order. Emission is deterministic: everything is listed in ascending id.

#ifndef DECOY_IO_H_
#define DECOY_IO_H_

#include <optional>
#include <string>
#include <vector>

#include "decoy/game.h"
#include "decoy/generators.h"
#include "decoy/hypergame.h"
#include "decoy/placement.h"
#include "decoy/solver.h"
#include "json.hpp"

namespace decoy {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct GameDocument {
  GameGraph game;
  std::optional<GridworldConfig> grid;
  std::vector<CandidateGroup> groups;
  std::vector<std::optional<Cell>> group_cells;  // parallel to groups

  bool has_groups() const { return !groups.empty(); }
};

GameDocument DocumentFromGridworld(const Gridworld& world);

// Throws kSchemaError naming the offending entry, and kValidationError
// listing every violation when `validate` is set and the game is invalid.
GameDocument GameFromJson(const Json& doc, bool validate = true);
Json GameToJson(const GameDocument& doc);
Json GameToJson(const GameGraph& g);

// Throws kParseError on malformed JSON text.
GameDocument ParseGameText(const std::string& text, bool validate = true);
// Throws kIoError when the file cannot be read or written.
GameDocument LoadGame(const std::string& path, bool validate = true);
void SaveGame(const GameDocument& doc, const std::string& path);
std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, const std::string& text);

GridworldConfig GridworldConfigFromJson(const Json& j);
Json GridworldConfigToJson(const GridworldConfig& cfg);

// Parses a comma list of state names or ids. Throws kUnknownState.
std::vector<StateId> ParseStateList(const GameGraph& g, const std::string& text);

Json StateListJson(const GameGraph& g, const StateSet& set);
Json VodJson(const Vod& vod);
Json SolveJson(const GameGraph& g, const SolveResult& res);
Json ViolationsJson(const GameGraph& g, const std::vector<Violation>& v);
Json PlacementJson(const GameGraph& g, const DecoyPlacement& p);
Json RegionJson(const GameGraph& g, Mode mode, const DecoyPlacement& p,
                const StateSet& region, const Vod& vod);
Json StrategyJson(const GameGraph& g, const StrategySupport& support);
Json PlacementReportJson(const GameGraph& g, const PlacementReport& report,
                         const std::vector<std::optional<Cell>>& cells = {});
Json ExhaustiveJson(const GameGraph& g, const ExhaustiveResult& result);
Json AuditJson(const GameGraph& g, const AuditReport& report);

// One CSV block per greedy iteration. With a grid: one row per grid row and
// NA for cells that are not candidates in that iteration. Without a grid:
// "group,vod" rows. Blocks are separated by "# iteration k (kind)" lines.
std::string HeatmapCsv(const PlacementReport& report,
                       const std::optional<GridworldConfig>& grid,
                       const std::vector<std::optional<Cell>>& cells);

}  // namespace decoy

#endif  // DECOY_IO_H_
