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


#ifndef THIELE_SOLVERS_HPP_
#define THIELE_SOLVERS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "thiele/instance.hpp"
#include "thiele/profile_graph.hpp"
#include "thiele/rational.hpp"

namespace thiele {

// Caps on every exponential search. Exceeding one throws
// Error(kBudgetExceeded) instead of truncating.
struct Budget {
  int64_t max_subsets = 2'000'000;
  int max_pattern_bits = 24;
  int64_t max_recursive_calls = 100'000;
};

// Replacements for the theoretical constants, which are far too large to
// make any rule fire on small inputs. Unset fields keep the formula value.
struct Overrides {
  std::optional<Rational> W;
  std::optional<int64_t> w;
  std::optional<int64_t> r;

  bool any() const { return W || w || r; }
};

struct Committee {
  CandidateSet members;  // sorted indices into the instance it came from
  Rational score;        // internal units
  int size_bound = 0;
};

struct RunStats {
  int64_t subsets_examined = 0;
  int64_t sunflower_deletions = 0;
  int64_t degree_shortcuts = 0;
  int64_t fptas_calls = 0;
  int64_t recursive_calls = 0;
  int64_t color_coding_calls = 0;
  int64_t repetitions = 0;
  int64_t patterns = 0;
  // Branch labels in the order they were taken.
  std::vector<std::string> events;
};

struct SolveOutcome {
  std::optional<Committee> committee;  // empty means no-instance
  RunStats stats;

  bool no_instance() const { return !committee.has_value(); }
};

// Best committee of size min(k, |C|) drawn from `pool` (sorted), ties to the
// lexicographically smallest index sequence.
Committee ExhaustiveSearch(const Instance& instance, std::span<const CandidateIndex> pool,
                           const Budget& budget, RunStats& stats);

// Maximum-score committee; no-instance when a threshold is set and missed.
SolveOutcome BruteForce(const Instance& instance, const Budget& budget = {});

// k rounds of largest marginal gain, ties to the lower index.
Committee Greedy(const Instance& instance);

// Candidates sorted by singleton score, descending, ties to the lower index.
CandidateSet TopBySingletonScore(const Instance& instance, int64_t count);

// Threshold required. `d` must be a K_{d,d}-freeness witness for the graph.
SolveOutcome Fptas(const Instance& instance, const Rational& eps, int d,
                   const Overrides& overrides = {}, const Budget& budget = {});

// Threshold required. Returns at most k + 1 members.
SolveOutcome Additive(const Instance& instance, int d, const Budget& budget = {});

// Threshold required; every voter must use the same vector. `reps` replaces
// the default repetition count k^k * t'^t' for every t'.
SolveOutcome ColorCoding(const Instance& instance, uint64_t seed,
                         std::optional<int64_t> reps = std::nullopt,
                         const Budget& budget = {});

// Threshold required; shared PAV vector required.
SolveOutcome PavDispatch(const Instance& instance, uint64_t seed,
                         std::optional<int64_t> reps = std::nullopt,
                         const Budget& budget = {});

// Rejects thresholds above k * max candidate degree outright, otherwise
// falls back to brute force.
SolveOutcome DecideByDelta(const Instance& instance, const Budget& budget = {});

enum class SolverKind { kExact, kGreedy, kFptas, kAdditive, kColorCoding, kPav, kDelta };

const char* SolverName(SolverKind kind);
// Throws Error(kInvalidArgument) on an unknown name.
SolverKind ParseSolverKind(const std::string& name);

struct SolveOptions {
  SolverKind solver = SolverKind::kExact;
  std::optional<Rational> epsilon;
  uint64_t seed = 0;
  std::optional<int64_t> reps;
  Overrides overrides;
  Budget budget;
};

// Runs the selected solver on an instance whose threshold, if any, is
// already in internal units.
SolveOutcome Solve(const Instance& instance, const SolveOptions& options, int d);

}  // namespace thiele

#endif  // THIELE_SOLVERS_HPP_
