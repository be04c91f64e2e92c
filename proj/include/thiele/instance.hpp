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


#ifndef THIELE_INSTANCE_HPP_
#define THIELE_INSTANCE_HPP_

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "thiele/owa.hpp"
#include "thiele/profile_graph.hpp"
#include "thiele/rational.hpp"

namespace thiele {

// Graph + per-voter OWA family + committee size + optional threshold.
// `family` is normalized and `threshold` is in the same internal units;
// multiply by `unit` to get back to the units of the input document.
struct Instance {
  ProfileGraph graph;
  OwaFamily family;
  int k = 0;
  std::optional<Rational> threshold;
  Rational unit{1};

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.graph == b.graph && a.family == b.family && a.k == b.k &&
           a.threshold == b.threshold && a.unit == b.unit;
  }
};

// Builds a normalized instance. Voters with no approvals or with an all-zero
// vector are dropped and every vector is cut to |A_v|; what remains is
// divided by lambda_max. Throws Error(kInvalidInput) when k < 0, when the
// family does not match the voters, or when nothing scores at all.
Instance MakeInstance(const ProfileGraph& graph, const OwaFamily& family, int k,
                      std::optional<Rational> threshold);

// Same instance without the candidates whose `keep` entry is false. Voters
// left without approvals are dropped. No renormalization.
Instance KeepCandidates(const Instance& instance, const std::vector<bool>& keep);

// Restriction to the listed voters, in order.
Instance SelectVoters(const Instance& instance, std::span<const VoterIndex> voters);

Rational ScoreOf(const Instance& instance, std::span<const CandidateIndex> committee);

inline Rational ToOriginalUnits(const Instance& instance, const Rational& value) {
  return value * instance.unit;
}

// Largest committee a solver may be asked to score on this instance.
inline int CommitteeBound(const Instance& instance) {
  return std::min(instance.k, instance.graph.num_candidates());
}

// A single vector that every voter uses, compared over the first
// min(|A_v|, k) positions (the only ones a size-k committee can reach).
std::optional<OwaVector> SharedVector(const Instance& instance);

// Shared vector equal to (1, 1/2, 1/3, ...) on the reachable positions.
bool IsPav(const Instance& instance);

// Candidate ids -> indices; throws Error(kInvalidArgument) on unknown ids.
std::vector<CandidateIndex> ResolveCandidates(const ProfileGraph& graph,
                                              std::span<const std::string> ids);
std::vector<std::string> CandidateNames(const ProfileGraph& graph,
                                        std::span<const CandidateIndex> committee);

}  // namespace thiele

#endif  // THIELE_INSTANCE_HPP_
