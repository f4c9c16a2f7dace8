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

#include "decoy/decoy.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>
#include <variant>

#include "decoy/errors.h"
#include "decoy/generators.h"
#include "decoy/hypergame.h"
#include "decoy/io.h"
#include "decoy/placement.h"
#include "decoy/solver.h"

struct decoy_game {
  decoy::GameDocument doc;
};

struct decoy_solution {
  decoy::GameGraph game;
  decoy::SolveResult result;
};

struct decoy_report {
  decoy::GameDocument doc;
  std::variant<decoy::PlacementReport, decoy::ExhaustiveResult,
               decoy::AuditReport>
      body;
};

namespace {

thread_local std::string g_last_error;

decoy_status StatusOf(decoy::ErrorCode code) {
  using decoy::ErrorCode;
  switch (code) {
    case ErrorCode::kUnknownState: return DECOY_ERR_UNKNOWN_STATE;
    case ErrorCode::kUnknownAction: return DECOY_ERR_UNKNOWN_ACTION;
    case ErrorCode::kMissingChoice: return DECOY_ERR_MISSING_CHOICE;
    case ErrorCode::kTooLarge: return DECOY_ERR_TOO_LARGE;
    case ErrorCode::kTooManyCombinations: return DECOY_ERR_TOO_MANY_COMBINATIONS;
    case ErrorCode::kTrapFakeOverlap: return DECOY_ERR_TRAP_FAKE_OVERLAP;
    case ErrorCode::kPlacementOverlapsFinals:
      return DECOY_ERR_PLACEMENT_OVERLAPS_FINALS;
    case ErrorCode::kDecoysOutsideWin2: return DECOY_ERR_DECOYS_OUTSIDE_WIN2;
    case ErrorCode::kIncompatibleComposition:
      return DECOY_ERR_INCOMPATIBLE_COMPOSITION;
    case ErrorCode::kInvalidConfig: return DECOY_ERR_INVALID_CONFIG;
    case ErrorCode::kInvalidParams: return DECOY_ERR_INVALID_PARAMS;
    case ErrorCode::kParseError: return DECOY_ERR_PARSE;
    case ErrorCode::kSchemaError: return DECOY_ERR_SCHEMA;
    case ErrorCode::kValidationError: return DECOY_ERR_VALIDATION;
    case ErrorCode::kIoError: return DECOY_ERR_IO;
  }
  return DECOY_ERR_INTERNAL;
}

decoy_status Fail(decoy_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
decoy_status Guard(Fn&& fn) {
  g_last_error.clear();
  try {
    fn();
    return DECOY_OK;
  } catch (const decoy::DecoyError& e) {
    return Fail(StatusOf(e.code()), e.what());
  } catch (const nlohmann::ordered_json::exception& e) {
    return Fail(DECOY_ERR_SCHEMA, e.what());
  } catch (const std::invalid_argument& e) {
    return Fail(DECOY_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return Fail(DECOY_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(DECOY_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(DECOY_ERR_INTERNAL, "unknown failure");
  }
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void Require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

decoy::Mode ModeOf(decoy_mode mode) {
  return mode == DECOY_MODE_ALMOST_SURE ? decoy::Mode::kAlmostSure
                                        : decoy::Mode::kSure;
}

decoy::DecoyPlacement PlacementOf(const decoy_placement* p) {
  decoy::DecoyPlacement out;
  if (p == nullptr) return out;
  if (p->num_traps > 0) {
    Require(p->traps != nullptr, "traps array is null");
    out.traps.assign(p->traps, p->traps + p->num_traps);
  }
  if (p->num_fakes > 0) {
    Require(p->fakes != nullptr, "fakes array is null");
    out.fakes.assign(p->fakes, p->fakes + p->num_fakes);
  }
  return out;
}

std::optional<std::vector<decoy::CandidateGroup>> CandidatesOf(
    const decoy::GameDocument& doc) {
  if (doc.has_groups()) return doc.groups;
  return std::nullopt;
}

}  // namespace

#define DECOY_CHECK_ARG(cond)                                      \
  do {                                                             \
    if (!(cond))                                                   \
      return Fail(DECOY_ERR_INVALID_ARGUMENT, "invalid argument: " #cond); \
  } while (0)

extern "C" {

const char* decoy_version(void) { return "1.0.0"; }

const char* decoy_last_error(void) { return g_last_error.c_str(); }

const char* decoy_status_name(decoy_status status) {
  switch (status) {
    case DECOY_OK: return "ok";
    case DECOY_ERR_UNKNOWN_STATE: return "UnknownState";
    case DECOY_ERR_UNKNOWN_ACTION: return "UnknownAction";
    case DECOY_ERR_MISSING_CHOICE: return "MissingChoice";
    case DECOY_ERR_TOO_LARGE: return "TooLarge";
    case DECOY_ERR_TOO_MANY_COMBINATIONS: return "TooManyCombinations";
    case DECOY_ERR_TRAP_FAKE_OVERLAP: return "TrapFakeOverlap";
    case DECOY_ERR_PLACEMENT_OVERLAPS_FINALS: return "PlacementOverlapsFinals";
    case DECOY_ERR_DECOYS_OUTSIDE_WIN2: return "DecoysOutsideWin2";
    case DECOY_ERR_INCOMPATIBLE_COMPOSITION: return "IncompatibleComposition";
    case DECOY_ERR_INVALID_CONFIG: return "InvalidConfig";
    case DECOY_ERR_INVALID_PARAMS: return "InvalidParams";
    case DECOY_ERR_PARSE: return "ParseError";
    case DECOY_ERR_SCHEMA: return "SchemaError";
    case DECOY_ERR_VALIDATION: return "ValidationError";
    case DECOY_ERR_IO: return "IoError";
    case DECOY_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case DECOY_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

int decoy_exit_code(decoy_status status) {
  if (status == DECOY_OK) return 0;
  if (status == DECOY_ERR_TOO_LARGE || status == DECOY_ERR_TOO_MANY_COMBINATIONS)
    return 2;
  return 1;
}

void decoy_string_free(char* s) { std::free(s); }

// ---- Games ----------------------------------------------------------------

decoy_status decoy_game_load_file(const char* path, decoy_game** out) {
  DECOY_CHECK_ARG(path != nullptr && out != nullptr);
  *out = nullptr;
  return Guard([&] { *out = new decoy_game{decoy::LoadGame(path)}; });
}

decoy_status decoy_game_load_json(const char* text, decoy_game** out) {
  DECOY_CHECK_ARG(text != nullptr && out != nullptr);
  *out = nullptr;
  return Guard([&] { *out = new decoy_game{decoy::ParseGameText(text)}; });
}

decoy_status decoy_game_to_json(const decoy_game* game, char** out) {
  DECOY_CHECK_ARG(game != nullptr && out != nullptr);
  *out = nullptr;
  return Guard(
      [&] { *out = CopyString(decoy::GameToJson(game->doc).dump(2) + "\n"); });
}

decoy_status decoy_game_save_file(const decoy_game* game, const char* path) {
  DECOY_CHECK_ARG(game != nullptr && path != nullptr);
  return Guard([&] { decoy::SaveGame(game->doc, path); });
}

void decoy_game_free(decoy_game* game) { delete game; }

size_t decoy_game_num_states(const decoy_game* game) {
  return game == nullptr ? 0 : game->doc.game.num_states();
}

size_t decoy_game_num_transitions(const decoy_game* game) {
  return game == nullptr ? 0 : game->doc.game.num_transitions();
}

decoy_status decoy_game_find_state(const decoy_game* game, const char* name,
                                   uint32_t* out_id) {
  DECOY_CHECK_ARG(game != nullptr && name != nullptr && out_id != nullptr);
  auto id = game->doc.game.FindState(name);
  if (!id) {
    return Fail(DECOY_ERR_UNKNOWN_STATE,
                std::string("UnknownState: no state named '") + name + "'");
  }
  *out_id = *id;
  return DECOY_OK;
}

decoy_status decoy_game_state_label(const decoy_game* game, uint32_t id,
                                    char** out) {
  DECOY_CHECK_ARG(game != nullptr && out != nullptr);
  *out = nullptr;
  if (!game->doc.game.HasState(id))
    return Fail(DECOY_ERR_UNKNOWN_STATE, "UnknownState: #" + std::to_string(id));
  return Guard([&] { *out = CopyString(game->doc.game.StateLabel(id)); });
}

decoy_status decoy_game_validate(const decoy_game* game, char** out,
                                 size_t* out_count) {
  DECOY_CHECK_ARG(game != nullptr && out != nullptr);
  *out = nullptr;
  return Guard([&] {
    const auto violations = decoy::ValidateGame(game->doc.game);
    if (out_count != nullptr) *out_count = violations.size();
    *out = CopyString(
        decoy::ViolationsJson(game->doc.game, violations).dump(2) + "\n");
  });
}

// ---- Generators -------------------------------------------------------------

decoy_status decoy_gen_gridworld(const char* config_json, decoy_game** out) {
  DECOY_CHECK_ARG(config_json != nullptr && out != nullptr);
  *out = nullptr;
  return Guard([&] {
    decoy::Json j;
    try {
      j = decoy::Json::parse(config_json);
    } catch (const decoy::Json::parse_error& e) {
      throw decoy::DecoyError(decoy::ErrorCode::kParseError, e.what());
    }
    const decoy::Gridworld world =
        decoy::MakeGridworld(decoy::GridworldConfigFromJson(j));
    *out = new decoy_game{decoy::DocumentFromGridworld(world)};
  });
}

decoy_status decoy_gen_random(size_t n_states, size_t n_p1, size_t max_actions,
                              size_t n_finals, uint64_t seed, decoy_game** out) {
  DECOY_CHECK_ARG(out != nullptr);
  *out = nullptr;
  return Guard([&] {
    decoy::RandomGameParams params;
    params.n_states = n_states;
    params.n_p1 = n_p1;
    params.max_actions = max_actions;
    if (n_finals > 0) params.n_finals = n_finals;
    params.seed = seed;
    decoy::GameDocument doc;
    doc.game = decoy::RandomGame(params);
    *out = new decoy_game{std::move(doc)};
  });
}

// ---- Reachability -----------------------------------------------------------

decoy_status decoy_solve(const decoy_game* game, decoy_player reacher,
                         decoy_solution** out) {
  DECOY_CHECK_ARG(game != nullptr && out != nullptr);
  DECOY_CHECK_ARG(reacher == DECOY_P1 || reacher == DECOY_P2);
  *out = nullptr;
  return Guard([&] {
    const decoy::GameGraph& g = game->doc.game;
    const decoy::Player p =
        reacher == DECOY_P1 ? decoy::Player::kP1 : decoy::Player::kP2;
    *out = new decoy_solution{g, decoy::Attractor(g, g.finals(), p)};
  });
}

uint32_t decoy_solution_rank(const decoy_solution* sol, uint32_t state) {
  if (sol == nullptr || state >= sol->result.rank.size())
    return DECOY_RANK_INFINITE;
  return sol->result.rank[state];
}

int decoy_solution_wins(const decoy_solution* sol, decoy_player player,
                        uint32_t state) {
  if (sol == nullptr) return 0;
  const decoy::Player p =
      player == DECOY_P1 ? decoy::Player::kP1 : decoy::Player::kP2;
  const auto& region = p == sol->result.reacher ? sol->result.win_reacher
                                                : sol->result.win_opponent;
  return region.contains(state) ? 1 : 0;
}

size_t decoy_solution_num_levels(const decoy_solution* sol) {
  return sol == nullptr ? 0 : sol->result.levels.size();
}

decoy_status decoy_solution_to_json(const decoy_solution* sol, char** out) {
  DECOY_CHECK_ARG(sol != nullptr && out != nullptr);
  *out = nullptr;
  return Guard([&] {
    *out = CopyString(decoy::SolveJson(sol->game, sol->result).dump(2) + "\n");
  });
}

void decoy_solution_free(decoy_solution* sol) { delete sol; }

// ---- Deception --------------------------------------------------------------

decoy_status decoy_region(const decoy_game* game, decoy_mode mode,
                          const decoy_placement* placement, uint32_t* out_ids,
                          size_t capacity, size_t* out_count) {
  DECOY_CHECK_ARG(game != nullptr && out_count != nullptr);
  DECOY_CHECK_ARG(capacity == 0 || out_ids != nullptr);
  return Guard([&] {
    const decoy::DeceptionAnalyzer analyzer(game->doc.game);
    const decoy::StateSet region =
        analyzer.Region(PlacementOf(placement), ModeOf(mode));
    const auto ids = region.ToVector();
    *out_count = ids.size();
    for (size_t i = 0; i < ids.size() && i < capacity; ++i) out_ids[i] = ids[i];
  });
}

decoy_status decoy_region_json(const decoy_game* game, decoy_mode mode,
                               const decoy_placement* placement, char** out) {
  DECOY_CHECK_ARG(game != nullptr && out != nullptr);
  *out = nullptr;
  return Guard([&] {
    const decoy::GameGraph& g = game->doc.game;
    const decoy::DeceptionAnalyzer analyzer(g);
    const decoy::DecoyPlacement p = PlacementOf(placement);
    const decoy::Mode m = ModeOf(mode);
    const decoy::StateSet region = analyzer.Region(p, m);
    decoy::Json j = decoy::RegionJson(
        g, m, p, region, {region.count(), analyzer.domain().count()});
    j["strategy"] = decoy::StrategyJson(g, analyzer.Strategy(p, m));
    *out = CopyString(j.dump(2) + "\n");
  });
}

decoy_status decoy_vod(const decoy_game* game, decoy_mode mode,
                       const decoy_placement* placement, size_t* numerator,
                       size_t* denominator) {
  DECOY_CHECK_ARG(game != nullptr && numerator != nullptr &&
                  denominator != nullptr);
  return Guard([&] {
    const decoy::Vod vod =
        decoy::ComputeVod(game->doc.game, PlacementOf(placement), ModeOf(mode));
    *numerator = vod.region;
    *denominator = vod.denom;
  });
}

// ---- Placement --------------------------------------------------------------

decoy_status decoy_place_greedy(const decoy_game* game, decoy_mode mode,
                                size_t traps, size_t fakes, decoy_report** out) {
  DECOY_CHECK_ARG(game != nullptr && out != nullptr);
  *out = nullptr;
  return Guard([&] {
    auto report = decoy::GreedyPlace(game->doc.game, traps, fakes, ModeOf(mode),
                                     CandidatesOf(game->doc));
    *out = new decoy_report{game->doc, std::move(report)};
  });
}

decoy_status decoy_place_exhaustive(const decoy_game* game, decoy_mode mode,
                                    size_t traps, size_t fakes,
                                    uint64_t max_combinations,
                                    decoy_report** out) {
  DECOY_CHECK_ARG(game != nullptr && out != nullptr);
  *out = nullptr;
  return Guard([&] {
    auto result = decoy::ExhaustivePlace(
        game->doc.game, traps, fakes, ModeOf(mode), CandidatesOf(game->doc),
        max_combinations == 0 ? decoy::kDefaultMaxCombinations
                              : max_combinations);
    *out = new decoy_report{game->doc, std::move(result)};
  });
}

decoy_status decoy_audit(const decoy_game* game, decoy_mode mode,
                         decoy_kind kind, size_t samples, uint64_t seed,
                         decoy_report** out) {
  DECOY_CHECK_ARG(game != nullptr && out != nullptr);
  *out = nullptr;
  return Guard([&] {
    auto report = decoy::SuperadditivityAudit(
        game->doc.game, ModeOf(mode), samples, seed,
        kind == DECOY_KIND_TRAP ? decoy::DecoyKind::kTrap
                                : decoy::DecoyKind::kFake);
    *out = new decoy_report{game->doc, std::move(report)};
  });
}

decoy_status decoy_report_to_json(const decoy_report* report, char** out) {
  DECOY_CHECK_ARG(report != nullptr && out != nullptr);
  *out = nullptr;
  return Guard([&] {
    const decoy::GameGraph& g = report->doc.game;
    decoy::Json j;
    if (auto* greedy = std::get_if<decoy::PlacementReport>(&report->body)) {
      j = decoy::PlacementReportJson(g, *greedy, report->doc.group_cells);
    } else if (auto* ex = std::get_if<decoy::ExhaustiveResult>(&report->body)) {
      j = decoy::ExhaustiveJson(g, *ex);
    } else {
      j = decoy::AuditJson(g, std::get<decoy::AuditReport>(report->body));
    }
    *out = CopyString(j.dump(2) + "\n");
  });
}

decoy_status decoy_report_heatmap_csv(const decoy_report* report, char** out) {
  DECOY_CHECK_ARG(report != nullptr && out != nullptr);
  *out = nullptr;
  auto* greedy = std::get_if<decoy::PlacementReport>(&report->body);
  if (greedy == nullptr)
    return Fail(DECOY_ERR_INVALID_ARGUMENT,
                "heatmaps are only available for greedy reports");
  return Guard([&] {
    *out = CopyString(decoy::HeatmapCsv(*greedy, report->doc.grid,
                                        report->doc.group_cells));
  });
}

void decoy_report_value(const decoy_report* report, size_t* numerator,
                        size_t* denominator) {
  size_t num = 0, den = 0;
  if (report != nullptr) {
    if (auto* greedy = std::get_if<decoy::PlacementReport>(&report->body)) {
      num = greedy->final_vod.region;
      den = greedy->final_vod.denom;
    } else if (auto* ex = std::get_if<decoy::ExhaustiveResult>(&report->body)) {
      num = ex->optimum.region;
      den = ex->optimum.denom;
    } else {
      const auto& audit = std::get<decoy::AuditReport>(report->body);
      num = audit.superadditivity_violations;
      den = audit.samples.size();
    }
  }
  if (numerator != nullptr) *numerator = num;
  if (denominator != nullptr) *denominator = den;
}

void decoy_report_free(decoy_report* report) { delete report; }

}  // extern "C"
