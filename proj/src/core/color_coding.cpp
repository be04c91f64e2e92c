// Copyright 2026 The Thiele Authors
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


#include <algorithm>
#include <random>
#include <set>

#include "thiele/error.hpp"
#include "thiele/score.hpp"
#include "thiele/solvers.hpp"

namespace thiele {
namespace {

using Mask = uint32_t;

std::mt19937_64 RepetitionRng(uint64_t seed, int t_prime, int64_t rep) {
  std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32),
                    static_cast<uint32_t>(t_prime), static_cast<uint32_t>(rep),
                    static_cast<uint32_t>(static_cast<uint64_t>(rep) >> 32)};
  return std::mt19937_64(seq);
}

int64_t DefaultReps(int colors, int t_prime) {
  return ToInt64(Integer(Pow(Rational(colors), colors) * Pow(Rational(t_prime), t_prime)));
}

// For every row mask R, the lowest-index candidate of one color class whose
// voter-color mask contains R. Returns the distinct candidates that occur.
CandidateSet DistinctChoices(const std::vector<CandidateIndex>& members,
                             const std::vector<Mask>& reach, int t_prime) {
  std::vector<CandidateIndex> first(std::size_t{1} << t_prime, -1);
  for (CandidateIndex c : members) {
    const Mask full = reach[c];
    for (Mask sub = full;; sub = (sub - 1) & full) {
      if (first[sub] < 0) first[sub] = c;
      if (sub == 0) break;
    }
  }
  CandidateSet out;
  for (CandidateIndex c : first) {
    if (c >= 0) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

SolveOutcome ColorCoding(const Instance& instance, uint64_t seed,
                         std::optional<int64_t> reps, const Budget& budget) {
  if (!instance.threshold) {
    throw Error(ErrorCode::kInvalidArgument, "colorcoding needs a threshold t");
  }
  const std::optional<OwaVector> shared = SharedVector(instance);
  if (!shared) {
    throw Error(ErrorCode::kInvalidArgument,
                "colorcoding needs every voter to use the same OWA vector");
  }
  if (reps && *reps < 1) throw Error(ErrorCode::kInvalidArgument, "reps must be positive");

  const Rational& t = *instance.threshold;
  const ProfileGraph& g = instance.graph;
  SolveOutcome out;
  RunStats& stats = out.stats;
  ++stats.color_coding_calls;
  stats.events.push_back("colorcoding");
  if (t <= 0) {
    Committee empty;
    empty.score = 0;
    empty.size_bound = instance.k;
    out.committee = std::move(empty);
    return out;
  }
  const int m = g.num_candidates();
  const int n = g.num_voters();
  const int colors = std::min(instance.k, m);
  if (colors == 0 || n == 0 || shared->weight(1) <= 0) return out;

  const int t_max = static_cast<int>(
      std::min<int64_t>(n, ToInt64(Ceil(t / shared->weight(1)))));
  std::set<CandidateSet> tried;
  std::vector<int> candidate_color(m);
  std::vector<int> voter_color(n);
  std::vector<Mask> reach(m);
  std::vector<std::vector<CandidateIndex>> classes(colors);
  std::vector<CandidateSet> choices(colors);
  std::vector<std::size_t> cursor(colors);

  for (int t_prime = 1; t_prime <= t_max; ++t_prime) {
    if (colors * t_prime > budget.max_pattern_bits || t_prime > 31) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "pattern graphs with k * t' = " + std::to_string(colors * t_prime) +
                      " bits exceed the budget of " +
                      std::to_string(budget.max_pattern_bits));
    }
    const int64_t rounds = reps ? *reps : DefaultReps(colors, t_prime);
    for (int64_t rep = 0; rep < rounds; ++rep) {
      ++stats.repetitions;
      std::mt19937_64 rng = RepetitionRng(seed, t_prime, rep);
      for (auto& cls : classes) cls.clear();
      for (CandidateIndex c = 0; c < m; ++c) {
        candidate_color[c] = static_cast<int>(rng() % static_cast<uint64_t>(colors));
        classes[candidate_color[c]].push_back(c);
      }
      for (VoterIndex v = 0; v < n; ++v) {
        voter_color[v] = static_cast<int>(rng() % static_cast<uint64_t>(t_prime));
      }
      for (CandidateIndex c = 0; c < m; ++c) {
        Mask mask = 0;
        for (VoterIndex v : g.approvers(c)) mask |= Mask{1} << voter_color[v];
        reach[c] = mask;
      }
      bool feasible = true;
      for (int i = 0; i < colors && feasible; ++i) {
        choices[i] = DistinctChoices(classes[i], reach, t_prime);
        feasible = !choices[i].empty();
      }
      if (!feasible) continue;

      std::fill(cursor.begin(), cursor.end(), 0);
      while (true) {
        CandidateSet committee(colors);
        for (int i = 0; i < colors; ++i) committee[i] = choices[i][cursor[i]];
        std::sort(committee.begin(), committee.end());
        ++stats.patterns;
        if (tried.insert(committee).second) {
          Rational score = ScoreOf(instance, committee);
          if (score >= t) {
            Committee found;
            found.members = std::move(committee);
            found.score = std::move(score);
            found.size_bound = instance.k;
            out.committee = std::move(found);
            return out;
          }
        }
        int i = 0;
        while (i < colors && ++cursor[i] == choices[i].size()) cursor[i++] = 0;
        if (i == colors) break;
      }
    }
  }
  return out;
}

}  // namespace thiele
