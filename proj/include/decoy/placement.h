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

#ifndef DECOY_PLACEMENT_H_
#define DECOY_PLACEMENT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "decoy/game.h"
#include "decoy/hypergame.h"
#include "decoy/state_set.h"

namespace decoy {

// Value of deception as the exact ratio region / denom. denom == 0 encodes
// the degenerate case Win2(G, F) = F, whose value is 0.
struct Vod {
  std::size_t region = 0;
  std::size_t denom = 0;

  double value() const {
    return denom == 0 ? 0.0
                      : static_cast<double>(region) / static_cast<double>(denom);
  }
  // Exact comparison by cross-multiplication.
  friend bool operator==(const Vod& a, const Vod& b) {
    return a.region * b.Den() == b.region * a.Den();
  }
  friend bool operator<(const Vod& a, const Vod& b) {
    return a.region * b.Den() < b.region * a.Den();
  }
  friend bool operator<=(const Vod& a, const Vod& b) { return !(b < a); }

 private:
  std::size_t Den() const { return denom == 0 ? 1 : denom; }
};

Vod ComputeVod(const DeceptionAnalyzer& analyzer, const DecoyPlacement& p,
               Mode mode);
Vod ComputeVod(const GameGraph& g, const DecoyPlacement& p, Mode mode);

struct CandidateGroup {
  std::string name;
  std::vector<StateId> members;  // sorted
};

// One singleton group per state of Win2(G, F) \ F, named by state label.
std::vector<CandidateGroup> DefaultCandidates(const DeceptionAnalyzer& analyzer);

// Throws kDecoysOutsideWin2 for members outside Win2 \ F and kInvalidParams
// for empty or overlapping groups.
void CheckCandidates(const DeceptionAnalyzer& analyzer,
                     const std::vector<CandidateGroup>& groups);

enum class DecoyKind { kTrap, kFake };
const char* DecoyKindName(DecoyKind kind);

struct HeatEntry {
  std::size_t group;  // index into PlacementReport::candidates
  Vod vod;
};

struct GreedyIteration {
  DecoyKind kind;
  std::vector<HeatEntry> heatmap;  // in candidate order
  std::size_t chosen;
  Vod best;
};

struct PlacementReport {
  Mode mode = Mode::kSure;
  std::vector<CandidateGroup> candidates;
  std::vector<std::size_t> trap_groups;
  std::vector<std::size_t> fake_groups;
  DecoyPlacement placement;  // union of the chosen groups' members
  std::vector<GreedyIteration> iterations;
  StateSet final_region;
  Vod final_vod;
};

// Fakes first (at most `fakes` groups), then traps (at most `traps` groups).
// Ties go to the group with the smallest minimum member id.
PlacementReport GreedyPlace(
    const GameGraph& g, std::size_t traps, std::size_t fakes, Mode mode,
    const std::optional<std::vector<CandidateGroup>>& candidates = std::nullopt);

struct ChosenGroups {
  std::vector<std::size_t> trap_groups;
  std::vector<std::size_t> fake_groups;
  friend bool operator==(const ChosenGroups&, const ChosenGroups&) = default;
};

struct ExhaustiveResult {
  std::vector<CandidateGroup> candidates;
  std::vector<ChosenGroups> best;  // every maximizer, in enumeration order
  Vod optimum;
  std::size_t evaluated = 0;
};

inline constexpr std::uint64_t kDefaultMaxCombinations = 100000;

// Number of (X, Y) group selections with |X| <= traps, |Y| <= fakes, disjoint.
// Saturates at UINT64_MAX.
std::uint64_t CountPlacements(std::size_t pool, std::size_t traps,
                              std::size_t fakes);

// Throws kTooManyCombinations when CountPlacements exceeds the bound.
ExhaustiveResult ExhaustivePlace(
    const GameGraph& g, std::size_t traps, std::size_t fakes, Mode mode,
    const std::optional<std::vector<CandidateGroup>>& candidates = std::nullopt,
    std::uint64_t max_combinations = kDefaultMaxCombinations);

struct AuditSample {
  std::vector<StateId> base;  // Y (or X for trap audits)
  StateId s1;
  StateId s2;
  std::size_t base_size;      // |R(Y)|
  std::size_t single_size;    // |R({s1})|
  std::size_t grown_size;     // |R(Y ∪ {s1})|
  std::size_t union_size;     // |R(Y) ∪ R({s1})|
  bool superadditive;         // base + single <= grown
  bool monotone;              // R(Y) ⊆ R(Y ∪ {s1})
  bool union_contained;       // R(Y) ∪ R({s1}) ⊆ R(Y ∪ {s1})
  bool union_condition;       // R(Y) ∪ R({s1}) == R(Y ∪ {s1})
  bool intersection_condition;  // R(Y ∪ {s1}) ∩ R(Y ∪ {s2}) == R(Y)
};

struct AuditReport {
  Mode mode = Mode::kSure;
  DecoyKind kind = DecoyKind::kFake;
  std::vector<AuditSample> samples;
  std::size_t superadditivity_violations = 0;
  std::size_t monotonicity_violations = 0;
  std::size_t union_containment_violations = 0;
  bool union_condition_everywhere = true;
  bool intersection_condition_everywhere = true;
};

// Samples (Y, s1, s2) with s1 ≠ s2 outside Y, all inside Win2 \ F, and checks
// the growth properties of Y -> R(Y) where R places Y as `kind` decoys.
AuditReport SuperadditivityAudit(const GameGraph& g, Mode mode,
                                 std::size_t sample_count, std::uint64_t seed,
                                 DecoyKind kind = DecoyKind::kFake);

}  // namespace decoy

#endif  // DECOY_PLACEMENT_H_
