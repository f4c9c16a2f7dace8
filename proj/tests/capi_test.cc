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

// Exercises the shared library through its C header only.

#include "decoy/decoy.h"

#include <string>
#include <vector>

#include "doctest.h"

namespace {

std::string Fixture(const char* name) {
  return std::string(DECOY_FIXTURE_DIR) + "/" + name;
}

struct GameHandle {
  decoy_game* g = nullptr;
  ~GameHandle() { decoy_game_free(g); }
};

std::string TakeString(char* s) {
  std::string out = s ? s : "";
  decoy_string_free(s);
  return out;
}

uint32_t StateId(const decoy_game* g, const char* name) {
  uint32_t id = 0;
  REQUIRE(decoy_game_find_state(g, name, &id) == DECOY_OK);
  return id;
}

TEST_CASE("load and solve the running example") {
  GameHandle h;
  REQUIRE(decoy_game_load_file(Fixture("running_example.json").c_str(), &h.g) ==
          DECOY_OK);
  CHECK(decoy_game_num_states(h.g) == 12);
  decoy_solution* sol = nullptr;
  REQUIRE(decoy_solve(h.g, DECOY_P2, &sol) == DECOY_OK);
  CHECK(decoy_solution_rank(sol, StateId(h.g, "s9")) == 5);
  CHECK(decoy_solution_rank(sol, StateId(h.g, "s10")) == DECOY_RANK_INFINITE);
  CHECK(decoy_solution_wins(sol, DECOY_P1, StateId(h.g, "s11")) == 1);
  CHECK(decoy_solution_wins(sol, DECOY_P2, StateId(h.g, "s11")) == 0);
  CHECK(decoy_solution_num_levels(sol) == 6);
  char* json = nullptr;
  REQUIRE(decoy_solution_to_json(sol, &json) == DECOY_OK);
  CHECK(TakeString(json).find("\"inf\"") != std::string::npos);
  decoy_solution_free(sol);
}

TEST_CASE("regions and vod") {
  GameHandle h;
  REQUIRE(decoy_game_load_file(Fixture("running_example.json").c_str(), &h.g) ==
          DECOY_OK);
  const uint32_t fakes[] = {StateId(h.g, "s7")};
  const decoy_placement p{nullptr, 0, fakes, 1};
  uint32_t ids[16];
  size_t count = 0;
  REQUIRE(decoy_region(h.g, DECOY_MODE_SURE, &p, ids, 16, &count) == DECOY_OK);
  CHECK(std::vector<uint32_t>(ids, ids + count) == std::vector<uint32_t>{5, 7, 8, 9});
  REQUIRE(decoy_region(h.g, DECOY_MODE_ALMOST_SURE, &p, ids, 2, &count) == DECOY_OK);
  CHECK(count == 3);
  size_t num = 0, den = 0;
  REQUIRE(decoy_vod(h.g, DECOY_MODE_SURE, &p, &num, &den) == DECOY_OK);
  CHECK(num == 4);
  CHECK(den == 8);
  char* json = nullptr;
  REQUIRE(decoy_region_json(h.g, DECOY_MODE_SURE, &p, &json) == DECOY_OK);
  CHECK(TakeString(json).find("\"strategy\"") != std::string::npos);

  const uint32_t outside[] = {StateId(h.g, "s10")};
  const decoy_placement bad{outside, 1, nullptr, 0};
  CHECK(decoy_region(h.g, DECOY_MODE_SURE, &bad, ids, 16, &count) ==
        DECOY_ERR_DECOYS_OUTSIDE_WIN2);
  CHECK(std::string(decoy_last_error()).find("s10") != std::string::npos);
}

TEST_CASE("placement reports") {
  GameHandle h;
  REQUIRE(decoy_game_load_file(Fixture("running_example.json").c_str(), &h.g) ==
          DECOY_OK);
  decoy_report* r = nullptr;
  REQUIRE(decoy_place_greedy(h.g, DECOY_MODE_SURE, 0, 1, &r) == DECOY_OK);
  size_t num = 0, den = 0;
  decoy_report_value(r, &num, &den);
  CHECK(num == 5);
  CHECK(den == 8);
  char* csv = nullptr;
  REQUIRE(decoy_report_heatmap_csv(r, &csv) == DECOY_OK);
  CHECK(TakeString(csv).find("s2,0.6250") != std::string::npos);
  decoy_report_free(r);

  REQUIRE(decoy_place_exhaustive(h.g, DECOY_MODE_SURE, 1, 1, 0, &r) == DECOY_OK);
  char* json = nullptr;
  REQUIRE(decoy_report_to_json(r, &json) == DECOY_OK);
  CHECK_FALSE(TakeString(json).empty());
  CHECK(decoy_report_heatmap_csv(r, &csv) == DECOY_ERR_INVALID_ARGUMENT);
  decoy_report_free(r);

  CHECK(decoy_place_exhaustive(h.g, DECOY_MODE_SURE, 3, 3, 5, &r) ==
        DECOY_ERR_TOO_MANY_COMBINATIONS);
  CHECK(decoy_exit_code(DECOY_ERR_TOO_MANY_COMBINATIONS) == 2);
  CHECK(decoy_exit_code(DECOY_ERR_VALIDATION) == 1);
  CHECK(decoy_exit_code(DECOY_OK) == 0);

  REQUIRE(decoy_audit(h.g, DECOY_MODE_SURE, DECOY_KIND_FAKE, 50, 3, &r) == DECOY_OK);
  decoy_report_value(r, &num, &den);
  CHECK(den == 50);
  decoy_report_free(r);
}

TEST_CASE("generators") {
  GameHandle grid;
  const char* cfg =
      R"({"rows":7,"cols":7,"obstacles":[[2,2],[2,3],[4,2],[5,4]],)"
      R"("cheese":[[1,6],[4,6]]})";
  REQUIRE(decoy_gen_gridworld(cfg, &grid.g) == DECOY_OK);
  CHECK(decoy_game_num_states(grid.g) == 4050);
  CHECK(decoy_game_num_transitions(grid.g) == 16200);
  CHECK(decoy_gen_gridworld(R"({"rows":2,"cols":2,"cheese":[[5,5]]})", &grid.g) ==
        DECOY_ERR_INVALID_CONFIG);

  GameHandle a, b;
  REQUIRE(decoy_gen_random(30, 15, 3, 0, 9, &a.g) == DECOY_OK);
  REQUIRE(decoy_gen_random(30, 15, 3, 0, 9, &b.g) == DECOY_OK);
  char* ja = nullptr;
  char* jb = nullptr;
  REQUIRE(decoy_game_to_json(a.g, &ja) == DECOY_OK);
  REQUIRE(decoy_game_to_json(b.g, &jb) == DECOY_OK);
  CHECK(TakeString(ja) == TakeString(jb));
  decoy_game* none = nullptr;
  CHECK(decoy_gen_random(3, 5, 3, 0, 1, &none) == DECOY_ERR_INVALID_PARAMS);
  CHECK(none == nullptr);
}

TEST_CASE("errors and argument checks") {
  decoy_game* g = nullptr;
  CHECK(decoy_game_load_json("{oops", &g) == DECOY_ERR_PARSE);
  CHECK(g == nullptr);
  CHECK(decoy_game_load_json(nullptr, &g) == DECOY_ERR_INVALID_ARGUMENT);
  CHECK(decoy_game_load_file("/nonexistent.json", &g) == DECOY_ERR_IO);
  CHECK(std::string(decoy_status_name(DECOY_ERR_SCHEMA)).size() > 0);
  CHECK(std::string(decoy_version()).size() > 0);

  GameHandle h;
  REQUIRE(decoy_game_load_file(Fixture("counterexample7.json").c_str(), &h.g) ==
          DECOY_OK);
  uint32_t id = 0;
  CHECK(decoy_game_find_state(h.g, "nope", &id) == DECOY_ERR_UNKNOWN_STATE);
  char* label = nullptr;
  REQUIRE(decoy_game_state_label(h.g, 4, &label) == DECOY_OK);
  CHECK(TakeString(label) == "s4");
  char* report = nullptr;
  size_t violations = 99;
  REQUIRE(decoy_game_validate(h.g, &report, &violations) == DECOY_OK);
  CHECK(violations == 0);
  decoy_string_free(report);
}

}  // namespace
