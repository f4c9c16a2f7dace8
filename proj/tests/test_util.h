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

#ifndef DECOY_TESTS_TEST_UTIL_H_
#define DECOY_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "decoy/errors.h"
#include "decoy/game.h"
#include "decoy/generators.h"
#include "decoy/hypergame.h"
#include "decoy/io.h"
#include "decoy/solver.h"

namespace decoy::testing {

inline std::string FixturePath(const std::string& name) {
  return std::string(DECOY_FIXTURE_DIR) + "/" + name;
}

inline GameGraph RunningExample() {
  return LoadGame(FixturePath("running_example.json")).game;
}

inline GameGraph Counterexample7() {
  return LoadGame(FixturePath("counterexample7.json")).game;
}

inline StateId Id(const GameGraph& g, const std::string& name) {
  auto id = g.FindState(name);
  if (!id) throw DecoyError(ErrorCode::kUnknownState, name);
  return *id;
}

inline std::vector<StateId> Ids(const GameGraph& g,
                                std::initializer_list<const char*> names) {
  std::vector<StateId> out;
  for (const char* n : names) out.push_back(Id(g, n));
  std::sort(out.begin(), out.end());
  return out;
}

inline StateSet Set(const GameGraph& g,
                    std::initializer_list<const char*> names) {
  return StateSet::FromRange(g.num_states(), Ids(g, names));
}

inline ActionId Act(const GameGraph& g, const std::string& name, Player owner) {
  auto id = g.FindAction(name, owner);
  if (!id) throw DecoyError(ErrorCode::kUnknownAction, name);
  return *id;
}

inline std::vector<std::string> Names(const GameGraph& g, const StateSet& s) {
  std::vector<std::string> out;
  s.ForEach([&](StateId x) { out.push_back(g.StateLabel(x)); });
  return out;
}

inline DecoyPlacement Place(const GameGraph& g,
                            std::initializer_list<const char*> traps,
                            std::initializer_list<const char*> fakes) {
  return {Ids(g, traps), Ids(g, fakes)};
}

// Random arena sized for property tests.
inline GameGraph SmallRandomGame(std::uint64_t seed, std::size_t max_states,
                                 std::size_t max_actions) {
  std::mt19937_64 rng(seed * 7919 + 17);
  RandomGameParams params;
  params.n_states =
      std::uniform_int_distribution<std::size_t>(4, max_states)(rng);
  params.n_p1 =
      std::uniform_int_distribution<std::size_t>(1, params.n_states - 1)(rng);
  params.max_actions = max_actions;
  params.n_finals = std::uniform_int_distribution<std::size_t>(
      1, std::max<std::size_t>(1, params.n_states / 6))(rng);
  params.seed = seed;
  return RandomGame(params);
}

}  // namespace decoy::testing

#endif  // DECOY_TESTS_TEST_UTIL_H_
