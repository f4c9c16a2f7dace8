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

#include "decoy/placement.h"

#include <algorithm>
#include <limits>
#include <random>

#include "decoy/errors.h"

namespace decoy {

Vod ComputeVod(const DeceptionAnalyzer& analyzer, const DecoyPlacement& p,
               Mode mode) {
  const StateSet region = analyzer.Region(p, mode);
  return {region.count(), analyzer.domain().count()};
}

Vod ComputeVod(const GameGraph& g, const DecoyPlacement& p, Mode mode) {
  return ComputeVod(DeceptionAnalyzer(g), p, mode);
}

const char* DecoyKindName(DecoyKind kind) {
  return kind == DecoyKind::kTrap ? "trap" : "fake";
}

std::vector<CandidateGroup> DefaultCandidates(
    const DeceptionAnalyzer& analyzer) {
  std::vector<CandidateGroup> out;
  analyzer.domain().ForEach([&](StateId s) {
    out.push_back({analyzer.game().StateLabel(s), {s}});
  });
  return out;
}

void CheckCandidates(const DeceptionAnalyzer& analyzer,
                     const std::vector<CandidateGroup>& groups) {
  const std::size_t n = analyzer.game().num_states();
  StateSet seen(n);
  for (const CandidateGroup& group : groups) {
    if (group.members.empty()) {
      throw DecoyError(ErrorCode::kInvalidParams,
                       "candidate group '" + group.name + "' is empty");
    }
    for (StateId s : group.members) {
      if (s >= n) {
        throw DecoyError(ErrorCode::kUnknownState,
                         "candidate group '" + group.name +
                             "' references unknown state #" + std::to_string(s));
      }
      if (!analyzer.domain().contains(s)) {
        throw DecoyError(ErrorCode::kDecoysOutsideWin2,
                         "candidate group '" + group.name + "' member " +
                             analyzer.game().StateLabel(s) +
                             " is outside Win2 \\ F");
      }
      if (seen.contains(s)) {
        throw DecoyError(ErrorCode::kInvalidParams,
                         "candidate groups overlap at " +
                             analyzer.game().StateLabel(s));
      }
      seen.insert(s);
    }
  }
}

namespace {

std::vector<CandidateGroup> ResolveCandidates(
    const DeceptionAnalyzer& analyzer,
    const std::optional<std::vector<CandidateGroup>>& candidates) {
  std::vector<CandidateGroup> groups =
      candidates ? *candidates : DefaultCandidates(analyzer);
  for (CandidateGroup& group : groups) {
    std::sort(group.members.begin(), group.members.end());
  }
  CheckCandidates(analyzer, groups);
  return groups;
}

DecoyPlacement PlacementOf(const std::vector<CandidateGroup>& groups,
                           const std::vector<std::size_t>& traps,
                           const std::vector<std::size_t>& fakes) {
  DecoyPlacement p;
  for (std::size_t i : traps)
    p.traps.insert(p.traps.end(), groups[i].members.begin(),
                   groups[i].members.end());
  for (std::size_t i : fakes)
    p.fakes.insert(p.fakes.end(), groups[i].members.begin(),
                   groups[i].members.end());
  std::sort(p.traps.begin(), p.traps.end());
  std::sort(p.fakes.begin(), p.fakes.end());
  return p;
}

}  // namespace

PlacementReport GreedyPlace(
    const GameGraph& g, std::size_t traps, std::size_t fakes, Mode mode,
    const std::optional<std::vector<CandidateGroup>>& candidates) {
  const DeceptionAnalyzer analyzer(g);
  PlacementReport report;
  report.mode = mode;
  report.candidates = ResolveCandidates(analyzer, candidates);
  const auto& groups = report.candidates;
  std::vector<bool> used(groups.size(), false);

  auto run = [&](DecoyKind kind, std::size_t budget) {
    auto& chosen = kind == DecoyKind::kFake ? report.fake_groups
                                            : report.trap_groups;
    while (chosen.size() < budget) {
      GreedyIteration it;
      it.kind = kind;
      std::optional<std::size_t> best;
      for (std::size_t i = 0; i < groups.size(); ++i) {
        if (used[i]) continue;
        chosen.push_back(i);
        const Vod vod = ComputeVod(
            analyzer,
            PlacementOf(groups, report.trap_groups, report.fake_groups), mode);
        chosen.pop_back();
        it.heatmap.push_back({i, vod});
        if (!best || it.best < vod ||
            (vod == it.best &&
             groups[i].members.front() < groups[*best].members.front())) {
          best = i;
          it.best = vod;
        }
      }
      if (!best) break;
      it.chosen = *best;
      used[*best] = true;
      chosen.push_back(*best);
      report.iterations.push_back(std::move(it));
    }
  };
  run(DecoyKind::kFake, fakes);
  run(DecoyKind::kTrap, traps);

  report.placement =
      PlacementOf(groups, report.trap_groups, report.fake_groups);
  report.final_region = analyzer.Region(report.placement, mode);
  report.final_vod = {report.final_region.count(), analyzer.domain().count()};
  return report;
}

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t SatMul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  return __builtin_mul_overflow(a, b, &out) ? kSaturated : out;
}

std::uint64_t SatAdd(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  return __builtin_add_overflow(a, b, &out) ? kSaturated : out;
}

std::uint64_t Binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  // Multiplicative formula on exact intermediate values, saturating early.
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(acc);
}

// Calls fn(combination) for every ascending k-subset of pool.
template <typename Fn>
void ForEachCombination(const std::vector<std::size_t>& pool, std::size_t k,
                        Fn&& fn) {
  if (k > pool.size()) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<std::size_t> pick(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) pick[i] = pool[idx[i]];
    fn(pick);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == pool.size() - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::uint64_t CountPlacements(std::size_t pool, std::size_t traps,
                              std::size_t fakes) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i <= std::min(fakes, pool); ++i) {
    const std::uint64_t fake_ways = Binomial(pool, i);
    for (std::size_t j = 0; j <= std::min(traps, pool - i); ++j)
      total = SatAdd(total, SatMul(fake_ways, Binomial(pool - i, j)));
  }
  return total;
}

ExhaustiveResult ExhaustivePlace(
    const GameGraph& g, std::size_t traps, std::size_t fakes, Mode mode,
    const std::optional<std::vector<CandidateGroup>>& candidates,
    std::uint64_t max_combinations) {
  const DeceptionAnalyzer analyzer(g);
  ExhaustiveResult result;
  result.candidates = ResolveCandidates(analyzer, candidates);
  const auto& groups = result.candidates;
  const std::uint64_t count = CountPlacements(groups.size(), traps, fakes);
  if (count > max_combinations) {
    throw DecoyError(ErrorCode::kTooManyCombinations,
                     std::to_string(count) + " placements exceed the bound " +
                         std::to_string(max_combinations));
  }
  result.optimum = {0, analyzer.domain().count()};

  std::vector<std::size_t> all(groups.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  bool first = true;
  for (std::size_t nf = 0; nf <= std::min(fakes, groups.size()); ++nf) {
    ForEachCombination(all, nf, [&](const std::vector<std::size_t>& fake_pick) {
      std::vector<std::size_t> rest;
      std::set_difference(all.begin(), all.end(), fake_pick.begin(),
                          fake_pick.end(), std::back_inserter(rest));
      for (std::size_t nt = 0; nt <= std::min(traps, rest.size()); ++nt) {
        ForEachCombination(
            rest, nt, [&](const std::vector<std::size_t>& trap_pick) {
              const Vod vod = ComputeVod(
                  analyzer, PlacementOf(groups, trap_pick, fake_pick), mode);
              ++result.evaluated;
              if (first || result.optimum < vod) {
                result.optimum = vod;
                result.best.clear();
                first = false;
              }
              if (vod == result.optimum)
                result.best.push_back({trap_pick, fake_pick});
            });
      }
    });
  }
  return result;
}

AuditReport SuperadditivityAudit(const GameGraph& g, Mode mode,
                                 std::size_t sample_count, std::uint64_t seed,
                                 DecoyKind kind) {
  const DeceptionAnalyzer analyzer(g);
  AuditReport report;
  report.mode = mode;
  report.kind = kind;
  std::vector<StateId> domain = analyzer.domain().ToVector();
  if (domain.empty()) return report;

  auto region = [&](const std::vector<StateId>& states) {
    DecoyPlacement p;
    (kind == DecoyKind::kFake ? p.fakes : p.traps) = states;
    return analyzer.Region(p, mode);
  };

  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < sample_count; ++k) {
    std::shuffle(domain.begin(), domain.end(), rng);
    const std::size_t max_base = std::min<std::size_t>(3, domain.size() - 1);
    const std::size_t base_size =
        std::uniform_int_distribution<std::size_t>(0, max_base)(rng);
    AuditSample sample{};
    sample.base.assign(domain.begin(), domain.begin() + base_size);
    std::sort(sample.base.begin(), sample.base.end());
    sample.s1 = domain[base_size];
    sample.s2 = base_size + 1 < domain.size() ? domain[base_size + 1] : sample.s1;

    auto with = [&](StateId s) {
      auto v = sample.base;
      v.insert(std::lower_bound(v.begin(), v.end(), s), s);
      return v;
    };
    const StateSet r_base = region(sample.base);
    const StateSet r_single = region({sample.s1});
    const StateSet r_grown = region(with(sample.s1));
    const StateSet r_union = r_base | r_single;

    sample.base_size = r_base.count();
    sample.single_size = r_single.count();
    sample.grown_size = r_grown.count();
    sample.union_size = r_union.count();
    sample.superadditive =
        sample.base_size + sample.single_size <= sample.grown_size;
    sample.monotone = r_base.IsSubsetOf(r_grown);
    sample.union_contained = r_union.IsSubsetOf(r_grown);
    sample.union_condition = r_union == r_grown;
    sample.intersection_condition =
        sample.s2 == sample.s1 || (r_grown & region(with(sample.s2))) == r_base;

    if (!sample.superadditive) ++report.superadditivity_violations;
    if (!sample.monotone) ++report.monotonicity_violations;
    if (!sample.union_contained) ++report.union_containment_violations;
    report.union_condition_everywhere &= sample.union_condition;
    report.intersection_condition_everywhere &= sample.intersection_condition;
    report.samples.push_back(std::move(sample));
  }
  return report;
}

}  // namespace decoy
