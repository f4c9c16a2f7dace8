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

#include "decoy/io.h"

#include <filesystem>

#include "doctest.h"
#include "test_util.h"

namespace decoy {
namespace {

using testing::Id;
using testing::RunningExample;

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const DecoyError& e) {
    return e.code();
  }
  FAIL("no DecoyError thrown");
  return ErrorCode::kIoError;
}

TEST_CASE("save then load is the identity") {
  const GameGraph g = RunningExample();
  const auto path =
      (std::filesystem::temp_directory_path() / "decoy_io_roundtrip.json").string();
  SaveGame(GameDocument{g}, path);
  CHECK(LoadGame(path).game == g);
  std::filesystem::remove(path);
  CHECK(ParseGameText(GameToJson(g).dump()).game == g);
}

TEST_CASE("dangling transition target names the edge") {
  Json doc = GameToJson(RunningExample());
  doc["transitions"][3]["to"] = 99;
  try {
    GameFromJson(doc);
    FAIL("expected SchemaError");
  } catch (const DecoyError& e) {
    CHECK(e.code() == ErrorCode::kSchemaError);
    CHECK(std::string(e.what()).find("transitions[3].to") != std::string::npos);
  }
}

TEST_CASE("malformed inputs") {
  CHECK(CodeOf([] { ParseGameText("{not json"); }) == ErrorCode::kParseError);
  CHECK(CodeOf([] { ParseGameText("[]"); }) == ErrorCode::kSchemaError);
  CHECK(CodeOf([] { LoadGame("/nonexistent/x.json"); }) == ErrorCode::kIoError);
  Json doc = GameToJson(RunningExample());
  doc["transitions"].push_back({{"from", 0}, {"action", "top"}, {"to", 5}});
  CHECK(CodeOf([&] { GameFromJson(doc); }) == ErrorCode::kValidationError);
  CHECK_NOTHROW(GameFromJson(doc, false));
  Json bad_version = GameToJson(RunningExample());
  bad_version["version"] = 99;
  CHECK(CodeOf([&] { GameFromJson(bad_version); }) == ErrorCode::kSchemaError);
}

TEST_CASE("names and ids are both accepted as references") {
  const GameGraph g = RunningExample();
  Json doc = GameToJson(g);
  doc["initial"] = "s9";
  doc["finals"] = Json::array({"s0", 1});
  CHECK(GameFromJson(doc).game == g);
}

TEST_CASE("state lists") {
  const GameGraph g = RunningExample();
  CHECK(ParseStateList(g, "s7, s2") == std::vector<StateId>{Id(g, "s2"), Id(g, "s7")});
  CHECK(ParseStateList(g, "").empty());
  CHECK(CodeOf([&] { ParseStateList(g, "s7,zz"); }) == ErrorCode::kUnknownState);
}

TEST_CASE("solve report uses inf for unreachable ranks") {
  const GameGraph g = RunningExample();
  const Json j = SolveJson(g, Attractor(g, g.finals(), Player::kP2));
  CHECK(j["ranks"]["s10"] == "inf");
  CHECK(j["ranks"]["s9"] == 5);
  CHECK(j["win1"] == Json::array({"s10", "s11"}));
}

TEST_CASE("gridworld heatmap csv has NA for ineligible cells") {
  GridworldConfig cfg;
  cfg.rows = 3;
  cfg.cols = 3;
  cfg.obstacles = {{1, 1}};
  cfg.cheese = {{0, 2}};
  const Gridworld w = MakeGridworld(cfg);
  const GameDocument doc = DocumentFromGridworld(w);
  const PlacementReport r = GreedyPlace(doc.game, 0, 1, Mode::kSure, doc.groups);
  const std::string csv = HeatmapCsv(r, doc.grid, doc.group_cells);
  CHECK(csv.rfind("# iteration 1 (fake)\n", 0) == 0);
  // Obstacle and cheese cells are never candidates.
  std::vector<std::string> lines;
  std::stringstream ss(csv);
  for (std::string line; std::getline(ss, line);) lines.push_back(line);
  REQUIRE(lines.size() == 4);
  CHECK(lines[1].substr(lines[1].rfind(',') + 1) == "NA");
  CHECK(lines[2].find(",NA,") != std::string::npos);

  const std::string plain = HeatmapCsv(GreedyPlace(RunningExample(), 0, 1, Mode::kSure),
                                       std::nullopt, {});
  CHECK(plain.find("group,vod\ns2,0.6250") != std::string::npos);
}

TEST_CASE("gridworld documents round-trip with groups") {
  GridworldConfig cfg;
  cfg.rows = 2;
  cfg.cols = 3;
  cfg.cheese = {{0, 2}};
  const GameDocument doc = DocumentFromGridworld(MakeGridworld(cfg));
  const GameDocument back = GameFromJson(GameToJson(doc));
  CHECK(back.game == doc.game);
  REQUIRE(back.grid.has_value());
  CHECK(back.grid->cheese == cfg.cheese);
  CHECK(back.groups.size() == doc.groups.size());
  for (std::size_t i = 0; i < doc.groups.size(); ++i) {
    CHECK(back.groups[i].members == doc.groups[i].members);
    CHECK(back.group_cells[i] == doc.group_cells[i]);
  }
  CHECK(GridworldConfigFromJson(GridworldConfigToJson(cfg)).cheese == cfg.cheese);
}

}  // namespace
}  // namespace decoy
