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

// decoy_cli: command-line front end over the decoy C API.
//
// Exit codes: 0 success, 1 invalid input or validation failure, 2 resource
// guard (oracle or enumeration bound exceeded).

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "decoy/decoy.h"

namespace {

struct CliError {
  int exit_code;
};

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using GamePtr = std::unique_ptr<decoy_game, Deleter<decoy_game, decoy_game_free>>;
using SolutionPtr =
    std::unique_ptr<decoy_solution, Deleter<decoy_solution, decoy_solution_free>>;
using ReportPtr =
    std::unique_ptr<decoy_report, Deleter<decoy_report, decoy_report_free>>;

// Reports a failed call on stderr and aborts the command.
void Check(decoy_status status) {
  if (status == DECOY_OK) return;
  std::cerr << "error: " << decoy_last_error() << "\n";
  throw CliError{decoy_exit_code(status)};
}

std::string TakeString(char* s) {
  std::string out = s == nullptr ? "" : s;
  decoy_string_free(s);
  return out;
}

struct Common {
  std::string input = "-";
  std::string out;
  std::string mode = "sure";
  std::string format = "json";
};

void Emit(const Common& c, const std::string& text) {
  if (c.out.empty() || c.out == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot write " << c.out << "\n";
    throw CliError{1};
  }
  f << text;
}

GamePtr LoadInput(const std::string& path) {
  decoy_game* game = nullptr;
  if (path.empty() || path == "-") {
    const std::string text((std::istreambuf_iterator<char>(std::cin)),
                           std::istreambuf_iterator<char>());
    Check(decoy_game_load_json(text.c_str(), &game));
  } else {
    Check(decoy_game_load_file(path.c_str(), &game));
  }
  return GamePtr(game);
}

decoy_mode ParseModeFlag(const std::string& mode) {
  if (mode == "sure") return DECOY_MODE_SURE;
  if (mode == "almost-sure" || mode == "almost_sure") return DECOY_MODE_ALMOST_SURE;
  std::cerr << "error: --mode must be sure or almost-sure\n";
  throw CliError{1};
}

std::vector<uint32_t> ResolveStates(const decoy_game* game,
                                    const std::string& list) {
  std::vector<uint32_t> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    item = item.substr(b, item.find_last_not_of(" \t") - b + 1);
    uint32_t id = 0;
    Check(decoy_game_find_state(game, item.c_str(), &id));
    out.push_back(id);
  }
  return out;
}

// "r,c;r,c" or "r,c/r,c" -> [[r,c],[r,c]]
std::string CellsJson(std::string text) {
  std::replace(text.begin(), text.end(), '/', ';');
  std::string out = "[";
  std::stringstream in(text);
  std::string item;
  bool first = true;
  while (std::getline(in, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    int r = 0, c = 0;
    char comma = 0;
    std::stringstream cell(item);
    if (!(cell >> r >> comma >> c) || comma != ',') {
      std::cerr << "error: cell '" << item << "' is not of the form row,col\n";
      throw CliError{1};
    }
    out += (first ? "" : ",") + std::string("[") + std::to_string(r) + "," +
           std::to_string(c) + "]";
    first = false;
  }
  return out + "]";
}

struct PlacementArgs {
  std::string trap_states;
  std::string fake_states;
};

void AddPlacementFlags(CLI::App* cmd, PlacementArgs& p) {
  cmd->add_option("--trap-states", p.trap_states,
                  "Comma-separated trap states (names or ids)");
  cmd->add_option("--fake-states", p.fake_states,
                  "Comma-separated fake-target states (names or ids)");
}

void AddCommon(CLI::App* cmd, Common& c, bool input, bool mode) {
  if (input)
    cmd->add_option("game", c.input, "Game JSON file ('-' or omitted: stdin)");
  cmd->add_option("--out", c.out, "Output file (default: stdout)");
  if (mode)
    cmd->add_option("--mode", c.mode, "sure | almost-sure")
        ->check(CLI::IsMember({"sure", "almost-sure", "almost_sure"}));
}

std::string RegionCommand(const Common& c, const PlacementArgs& pa,
                          decoy_mode mode, bool vod_only) {
  GamePtr game = LoadInput(c.input);
  const auto traps = ResolveStates(game.get(), pa.trap_states);
  const auto fakes = ResolveStates(game.get(), pa.fake_states);
  const decoy_placement p{traps.data(), traps.size(), fakes.data(), fakes.size()};
  if (vod_only && c.format == "csv") {
    size_t num = 0, den = 0;
    Check(decoy_vod(game.get(), mode, &p, &num, &den));
    std::ostringstream out;
    out << "region,denominator,vod\n"
        << num << "," << den << ","
        << (den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den))
        << "\n";
    return out.str();
  }
  char* json = nullptr;
  Check(decoy_region_json(game.get(), mode, &p, &json));
  std::string text = TakeString(json);
  if (c.format == "csv") {
    std::vector<uint32_t> ids(decoy_game_num_states(game.get()));
    size_t count = 0;
    Check(decoy_region(game.get(), mode, &p, ids.data(), ids.size(), &count));
    std::string csv = "state\n";
    for (size_t i = 0; i < count; ++i) {
      char* label = nullptr;
      Check(decoy_game_state_label(game.get(), ids[i], &label));
      csv += TakeString(label) + "\n";
    }
    return csv;
  }
  return text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deceptive reachability games: solve, analyze, and place decoys"};
  app.require_subcommand(1);

  // solve
  Common solve_c;
  int reacher = 2;
  auto* solve = app.add_subcommand("solve", "Attractor ranks and winning regions");
  AddCommon(solve, solve_c, true, false);
  solve->add_option("--reacher", reacher, "Player reaching the finals (1 or 2)")
      ->check(CLI::IsMember({1, 2}));

  // validate
  Common validate_c;
  auto* validate = app.add_subcommand("validate", "Check arena invariants");
  AddCommon(validate, validate_c, true, false);

  // dswin / daswin / vod
  Common dswin_c, daswin_c, vod_c;
  PlacementArgs dswin_p, daswin_p, vod_p;
  auto* dswin = app.add_subcommand("dswin", "Deceptive sure winning region");
  AddCommon(dswin, dswin_c, true, false);
  AddPlacementFlags(dswin, dswin_p);
  dswin->add_option("--format", dswin_c.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
  auto* daswin =
      app.add_subcommand("daswin", "Deceptive almost-sure winning region");
  AddCommon(daswin, daswin_c, true, false);
  AddPlacementFlags(daswin, daswin_p);
  daswin->add_option("--format", daswin_c.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
  auto* vod = app.add_subcommand("vod", "Value of deception of a placement");
  AddCommon(vod, vod_c, true, true);
  AddPlacementFlags(vod, vod_p);
  vod->add_option("--format", vod_c.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // place greedy / exhaustive
  auto* place = app.add_subcommand("place", "Decoy placement");
  place->require_subcommand(1);
  Common greedy_c, exh_c;
  std::size_t greedy_traps = 0, greedy_fakes = 0, exh_traps = 0, exh_fakes = 0;
  std::uint64_t max_comb = 0;
  auto* greedy = place->add_subcommand("greedy", "Greedy placement, fakes first");
  AddCommon(greedy, greedy_c, true, true);
  greedy->add_option("--traps", greedy_traps, "Trap budget M");
  greedy->add_option("--fakes", greedy_fakes, "Fake-target budget N");
  greedy->add_option("--format", greedy_c.format,
                     "json (report) | csv (per-iteration heatmaps)")
      ->check(CLI::IsMember({"json", "csv"}));
  auto* exhaustive =
      place->add_subcommand("exhaustive", "Optimal placement by enumeration");
  AddCommon(exhaustive, exh_c, true, true);
  exhaustive->add_option("--traps", exh_traps, "Trap budget M");
  exhaustive->add_option("--fakes", exh_fakes, "Fake-target budget N");
  exhaustive->add_option("--max-combinations", max_comb,
                         "Enumeration bound (default 100000)");

  // gen gridworld / random
  auto* gen = app.add_subcommand("gen", "Generate games");
  gen->require_subcommand(1);
  Common grid_c, rand_c;
  int rows = 7, cols = 7;
  std::string obstacles, cheese, config_path, cat_start, mouse_start;
  bool cat_first = false;
  auto* grid = gen->add_subcommand("gridworld", "Cat-and-mouse gridworld");
  AddCommon(grid, grid_c, false, false);
  grid->add_option("--config", config_path, "Gridworld config JSON file");
  grid->add_option("--rows", rows, "Grid rows");
  grid->add_option("--cols", cols, "Grid columns");
  grid->add_option("--obstacles", obstacles, "Obstacle cells 'r,c;r,c' (or '/' separated)");
  grid->add_option("--cheese", cheese, "Cheese cells 'r,c;r,c' (or '/' separated)");
  grid->add_option("--cat-start", cat_start, "Cat start cell 'r,c'");
  grid->add_option("--mouse-start", mouse_start, "Mouse start cell 'r,c'");
  grid->add_flag("--cat-first", cat_first, "Cat moves first (default: mouse)");
  std::size_t n_states = 150, n_p1 = 75, max_actions = 5, n_finals = 0;
  std::uint64_t seed = 0;
  auto* random = gen->add_subcommand("random", "Seeded random game");
  AddCommon(random, rand_c, false, false);
  random->add_option("--states", n_states, "Number of states");
  random->add_option("--p1", n_p1, "Number of P1 states");
  random->add_option("--max-actions", max_actions, "Actions per state, at most");
  random->add_option("--finals", n_finals, "Number of finals (0: states/30)");
  random->add_option("--seed", seed, "RNG seed");

  // audit
  Common audit_c;
  std::size_t samples = 50;
  std::uint64_t audit_seed = 0;
  std::string kind = "fake";
  auto* audit = app.add_subcommand("audit", "Superadditivity and modularity audit");
  AddCommon(audit, audit_c, true, true);
  audit->add_option("--samples", samples, "Number of sampled triples");
  audit->add_option("--seed", audit_seed, "RNG seed");
  audit->add_option("--kind", kind, "fake | trap")
      ->check(CLI::IsMember({"fake", "trap"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*solve) {
      GamePtr game = LoadInput(solve_c.input);
      decoy_solution* sol = nullptr;
      Check(decoy_solve(game.get(), reacher == 1 ? DECOY_P1 : DECOY_P2, &sol));
      SolutionPtr owned(sol);
      char* json = nullptr;
      Check(decoy_solution_to_json(sol, &json));
      Emit(solve_c, TakeString(json));
    } else if (*validate) {
      GamePtr game = LoadInput(validate_c.input);
      char* json = nullptr;
      size_t count = 0;
      Check(decoy_game_validate(game.get(), &json, &count));
      Emit(validate_c, TakeString(json));
      return count == 0 ? 0 : 1;
    } else if (*dswin) {
      Emit(dswin_c, RegionCommand(dswin_c, dswin_p, DECOY_MODE_SURE, false));
    } else if (*daswin) {
      Emit(daswin_c,
           RegionCommand(daswin_c, daswin_p, DECOY_MODE_ALMOST_SURE, false));
    } else if (*vod) {
      Emit(vod_c, RegionCommand(vod_c, vod_p, ParseModeFlag(vod_c.mode), true));
    } else if (*greedy) {
      GamePtr game = LoadInput(greedy_c.input);
      decoy_report* report = nullptr;
      Check(decoy_place_greedy(game.get(), ParseModeFlag(greedy_c.mode),
                               greedy_traps, greedy_fakes, &report));
      ReportPtr owned(report);
      char* text = nullptr;
      if (greedy_c.format == "csv") {
        Check(decoy_report_heatmap_csv(report, &text));
      } else {
        Check(decoy_report_to_json(report, &text));
      }
      Emit(greedy_c, TakeString(text));
    } else if (*exhaustive) {
      GamePtr game = LoadInput(exh_c.input);
      decoy_report* report = nullptr;
      Check(decoy_place_exhaustive(game.get(), ParseModeFlag(exh_c.mode),
                                   exh_traps, exh_fakes, max_comb, &report));
      ReportPtr owned(report);
      char* text = nullptr;
      Check(decoy_report_to_json(report, &text));
      Emit(exh_c, TakeString(text));
    } else if (*grid) {
      std::string config;
      if (!config_path.empty()) {
        std::ifstream in(config_path, std::ios::binary);
        if (!in) {
          std::cerr << "error: cannot open " << config_path << "\n";
          return 1;
        }
        config.assign(std::istreambuf_iterator<char>(in),
                      std::istreambuf_iterator<char>());
      } else {
        config = "{\"rows\":" + std::to_string(rows) +
                 ",\"cols\":" + std::to_string(cols) +
                 ",\"obstacles\":" + CellsJson(obstacles) +
                 ",\"cheese\":" + CellsJson(cheese) +
                 ",\"mouse_first\":" + (cat_first ? "false" : "true");
        if (!cat_start.empty()) {
          const std::string c = CellsJson(cat_start);
          config += ",\"cat_start\":" + c.substr(1, c.size() - 2);
        }
        if (!mouse_start.empty()) {
          const std::string c = CellsJson(mouse_start);
          config += ",\"mouse_start\":" + c.substr(1, c.size() - 2);
        }
        config += "}";
      }
      decoy_game* game = nullptr;
      Check(decoy_gen_gridworld(config.c_str(), &game));
      GamePtr owned(game);
      char* json = nullptr;
      Check(decoy_game_to_json(game, &json));
      Emit(grid_c, TakeString(json));
    } else if (*random) {
      decoy_game* game = nullptr;
      Check(decoy_gen_random(n_states, n_p1, max_actions, n_finals, seed, &game));
      GamePtr owned(game);
      char* json = nullptr;
      Check(decoy_game_to_json(game, &json));
      Emit(rand_c, TakeString(json));
    } else if (*audit) {
      GamePtr game = LoadInput(audit_c.input);
      decoy_report* report = nullptr;
      Check(decoy_audit(game.get(), ParseModeFlag(audit_c.mode),
                        kind == "trap" ? DECOY_KIND_TRAP : DECOY_KIND_FAKE,
                        samples, audit_seed, &report));
      ReportPtr owned(report);
      char* json = nullptr;
      Check(decoy_report_to_json(report, &json));
      Emit(audit_c, TakeString(json));
    }
  } catch (const CliError& e) {
    return e.exit_code;
  }
  return 0;
}
