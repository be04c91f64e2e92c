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


#ifndef THIELE_REDUCTIONS_HPP_
#define THIELE_REDUCTIONS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thiele/instance.hpp"
#include "thiele/rational.hpp"
#include "thiele/solvers.hpp"

namespace thiele {

// One firing of the sunflower rule, by id so it can be replayed on any
// instance that still has these candidates.
struct SunflowerDeletion {
  std::string deleted;
  std::vector<std::string> members;
  std::vector<std::string> core;  // voter ids
};

struct SunflowerResult {
  Instance instance;
  std::vector<SunflowerDeletion> deletions;
};

// Deletes the lowest singleton-score member of a sunflower with at least `w`
// members among candidates of degree <= floor(W); repeats until none is
// found when `exhaustive` is set. Callers must make sure every candidate
// degree is at most W.
SunflowerResult ApplySunflowerRule(const Instance& instance, const Rational& W,
                                   const Integer& w, bool exhaustive = true);

enum class CandidateCase { kSkipped, kLowThreshold, kHighThreshold };

const char* CandidateCaseName(CandidateCase c);

struct CandidateStageTrace {
  Rational epsilon;
  int d = 1;
  Rational apx_opt;
  Rational r;
  int64_t keep = 0;  // ceil(r), or the override
  Rational t_star;
  Integer psi;
  Rational W;
  Integer w;
  CandidateCase case_taken = CandidateCase::kSkipped;
  // Low case: a candidate whose singleton score already beats OPT.
  std::optional<std::string> certified;
  std::vector<SunflowerDeletion> deletions;
  // High case: the surviving candidates, in index order.
  std::vector<std::string> kept;
  int candidates_before = 0;
  int candidates_after = 0;
};

struct VoterGroup {
  std::string representative;
  int64_t multiplicity = 0;
  int64_t kept = 0;
};

struct VoterStageTrace {
  Rational epsilon;
  int d = 1;
  Rational apx_opt;
  Rational epsilon_tilde;
  Rational epsilon_star;
  // n in the scale formula; it counts candidates.
  int n = 0;
  Rational scale;            // as computed
  Rational effective_scale;  // 1 when the computed scale is at most 1
  std::vector<VoterGroup> groups;
  int voters_before = 0;
  int voters_after = 0;
};

struct KernelTrace {
  Rational epsilon;
  CandidateStageTrace candidates;
  VoterStageTrace voters;
};

struct CandidateStageResult {
  Instance instance;
  CandidateStageTrace trace;
};

struct VoterStageResult {
  Instance instance;
  VoterStageTrace trace;
};

struct KernelResult {
  Instance instance;
  KernelTrace trace;
};

// `d` must be a K_{d,d}-freeness witness. Throws Error(kInvalidArgument)
// unless 0 < eps < 1.
CandidateStageResult ReduceCandidates(const Instance& instance, const Rational& eps,
                                      int d, const Overrides& overrides = {});

// Throws Error(kInvalidInput) when voters with the same approval set carry
// different vectors.
VoterStageResult ReduceVoters(const Instance& instance, const Rational& eps, int d);

// Candidate stage at eps/2, then voter stage at eps/2. The kernel carries no
// threshold.
KernelResult Kernelize(const Instance& instance, const Rational& eps, int d,
                       const Overrides& overrides = {});

// Re-applies a trace to the instance it was computed from.
Instance ReplayTrace(const Instance& original, const KernelTrace& trace);

// The same members, looked up by id and scored on `original`.
Committee Lift(const Committee& solution, const Instance& kernel,
               const Instance& original);

}  // namespace thiele

#endif  // THIELE_REDUCTIONS_HPP_
