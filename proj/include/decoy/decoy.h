/* Copyright 2026 The Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C API of the decoy placement solver.
 *
 * All objects are opaque handles released with their *_free function.
 * Functions return a decoy_status; on failure a message is available from
 * decoy_last_error() on the calling thread until the next API call there.
 * Strings returned through char** are heap allocated and must be released
 * with decoy_string_free(). State ids are dense, 0-based.
 */

#ifndef DECOY_DECOY_H_
#define DECOY_DECOY_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(DECOY_BUILDING_LIBRARY)
#define DECOY_API __declspec(dllexport)
#else
#define DECOY_API __declspec(dllimport)
#endif
#else
#define DECOY_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct decoy_game decoy_game;
typedef struct decoy_solution decoy_solution;
typedef struct decoy_report decoy_report;

typedef enum decoy_status {
  DECOY_OK = 0,
  DECOY_ERR_UNKNOWN_STATE = 1,
  DECOY_ERR_UNKNOWN_ACTION = 2,
  DECOY_ERR_MISSING_CHOICE = 3,
  DECOY_ERR_TOO_LARGE = 4,
  DECOY_ERR_TOO_MANY_COMBINATIONS = 5,
  DECOY_ERR_TRAP_FAKE_OVERLAP = 6,
  DECOY_ERR_PLACEMENT_OVERLAPS_FINALS = 7,
  DECOY_ERR_DECOYS_OUTSIDE_WIN2 = 8,
  DECOY_ERR_INCOMPATIBLE_COMPOSITION = 9,
  DECOY_ERR_INVALID_CONFIG = 10,
  DECOY_ERR_INVALID_PARAMS = 11,
  DECOY_ERR_PARSE = 12,
  DECOY_ERR_SCHEMA = 13,
  DECOY_ERR_VALIDATION = 14,
  DECOY_ERR_IO = 15,
  DECOY_ERR_INVALID_ARGUMENT = 16,
  DECOY_ERR_INTERNAL = 17
} decoy_status;

typedef enum decoy_mode {
  DECOY_MODE_SURE = 0,
  DECOY_MODE_ALMOST_SURE = 1
} decoy_mode;

typedef enum decoy_kind { DECOY_KIND_TRAP = 0, DECOY_KIND_FAKE = 1 } decoy_kind;

typedef enum decoy_player { DECOY_P1 = 1, DECOY_P2 = 2 } decoy_player;

/* Trap and fake state ids. Either array may be NULL when its count is 0. */
typedef struct decoy_placement {
  const uint32_t* traps;
  size_t num_traps;
  const uint32_t* fakes;
  size_t num_fakes;
} decoy_placement;

#define DECOY_RANK_INFINITE UINT32_MAX

/* ---- Diagnostics ------------------------------------------------------- */

DECOY_API const char* decoy_version(void);
DECOY_API const char* decoy_last_error(void);
DECOY_API const char* decoy_status_name(decoy_status status);
/* 0 for DECOY_OK, 2 for resource guards (too large / too many combinations),
 * 1 otherwise. */
DECOY_API int decoy_exit_code(decoy_status status);
DECOY_API void decoy_string_free(char* s);

/* ---- Games ------------------------------------------------------------- */

DECOY_API decoy_status decoy_game_load_file(const char* path, decoy_game** out);
DECOY_API decoy_status decoy_game_load_json(const char* text, decoy_game** out);
DECOY_API decoy_status decoy_game_to_json(const decoy_game* game, char** out);
DECOY_API decoy_status decoy_game_save_file(const decoy_game* game,
                                            const char* path);
DECOY_API void decoy_game_free(decoy_game* game);

DECOY_API size_t decoy_game_num_states(const decoy_game* game);
DECOY_API size_t decoy_game_num_transitions(const decoy_game* game);
/* Accepts a state name, "#<id>" or a decimal id. */
DECOY_API decoy_status decoy_game_find_state(const decoy_game* game,
                                             const char* name, uint32_t* out_id);
DECOY_API decoy_status decoy_game_state_label(const decoy_game* game,
                                              uint32_t id, char** out);
/* Writes a JSON array of violations; *out_count receives their number. */
DECOY_API decoy_status decoy_game_validate(const decoy_game* game, char** out,
                                           size_t* out_count);

/* ---- Generators -------------------------------------------------------- */

/* config_json: {"rows", "cols", "obstacles": [[r, c], ...],
 * "cheese": [[r, c], ...], "mouse_first", "cat_start", "mouse_start"}. */
DECOY_API decoy_status decoy_gen_gridworld(const char* config_json,
                                           decoy_game** out);
/* n_finals == 0 selects max(1, n_states / 30). */
DECOY_API decoy_status decoy_gen_random(size_t n_states, size_t n_p1,
                                        size_t max_actions, size_t n_finals,
                                        uint64_t seed, decoy_game** out);

/* ---- Reachability ------------------------------------------------------ */

/* Attractor of `reacher` to the game's final states. */
DECOY_API decoy_status decoy_solve(const decoy_game* game, decoy_player reacher,
                                   decoy_solution** out);
DECOY_API uint32_t decoy_solution_rank(const decoy_solution* sol,
                                       uint32_t state);
/* 1 if `state` is in `player`'s winning region, 0 otherwise. */
DECOY_API int decoy_solution_wins(const decoy_solution* sol,
                                  decoy_player player, uint32_t state);
DECOY_API size_t decoy_solution_num_levels(const decoy_solution* sol);
DECOY_API decoy_status decoy_solution_to_json(const decoy_solution* sol,
                                              char** out);
DECOY_API void decoy_solution_free(decoy_solution* sol);

/* ---- Deception --------------------------------------------------------- */

/* DSWin (sure) or DASWin (almost-sure). Writes up to `capacity` ids in
 * ascending order; *out_count always receives the full region size. */
DECOY_API decoy_status decoy_region(const decoy_game* game, decoy_mode mode,
                                    const decoy_placement* placement,
                                    uint32_t* out_ids, size_t capacity,
                                    size_t* out_count);
/* Region, value of deception and P1's deceptive strategy as JSON. */
DECOY_API decoy_status decoy_region_json(const decoy_game* game,
                                         decoy_mode mode,
                                         const decoy_placement* placement,
                                         char** out);
/* Value of deception as numerator / denominator (denominator 0 means 0). */
DECOY_API decoy_status decoy_vod(const decoy_game* game, decoy_mode mode,
                                 const decoy_placement* placement,
                                 size_t* numerator, size_t* denominator);

/* ---- Placement --------------------------------------------------------- */

/* Candidates are the game's candidate groups when present, otherwise every
 * state of Win2 \ F. */
DECOY_API decoy_status decoy_place_greedy(const decoy_game* game,
                                          decoy_mode mode, size_t traps,
                                          size_t fakes, decoy_report** out);
/* max_combinations == 0 selects the default bound of 100000. */
DECOY_API decoy_status decoy_place_exhaustive(const decoy_game* game,
                                              decoy_mode mode, size_t traps,
                                              size_t fakes,
                                              uint64_t max_combinations,
                                              decoy_report** out);
DECOY_API decoy_status decoy_audit(const decoy_game* game, decoy_mode mode,
                                   decoy_kind kind, size_t samples,
                                   uint64_t seed, decoy_report** out);

DECOY_API decoy_status decoy_report_to_json(const decoy_report* report,
                                            char** out);
/* Greedy reports only: per-iteration heatmaps as CSV. */
DECOY_API decoy_status decoy_report_heatmap_csv(const decoy_report* report,
                                                char** out);
/* Final (greedy) or optimal (exhaustive) value of deception. Audit reports
 * yield the number of superadditivity violations over the sample count. */
DECOY_API void decoy_report_value(const decoy_report* report,
                                  size_t* numerator, size_t* denominator);
DECOY_API void decoy_report_free(decoy_report* report);

#ifdef __cplusplus
}
#endif

#endif /* DECOY_DECOY_H_ */
