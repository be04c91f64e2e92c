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

#include "thiele/score.hpp"

#include <algorithm>

#include "thiele/error.hpp"

namespace thiele {
namespace {

std::vector<int> HitCounts(const ProfileGraph& g,
                           std::span<const CandidateIndex> committee) {
  std::vector<int> hits(g.num_voters(), 0);
  std::vector<bool> seen(g.num_candidates(), false);
  for (CandidateIndex c : committee) {
    if (c < 0 || c >= g.num_candidates()) {
      throw Error(ErrorCode::kInvalidArgument, "unknown candidate index");
    }
    if (seen[c]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "candidate \"" + g.candidate_id(c) + "\" listed twice");
    }
    seen[c] = true;
    for (VoterIndex v : g.approvers(c)) ++hits[v];
  }
  return hits;
}

void CheckAligned(const ProfileGraph& g, const OwaFamily& family) {
  if (static_cast<int>(family.size()) != g.num_voters()) {
    throw Error(ErrorCode::kInvalidArgument, "OWA family does not cover the voters");
  }
}

}  // namespace

Rational Score(const ProfileGraph& g, const OwaFamily& family,
               std::span<const CandidateIndex> committee) {
  CheckAligned(g, family);
  const std::vector<int> hits = HitCounts(g, committee);
  Rational total(0);
  for (VoterIndex v = 0; v < g.num_voters(); ++v) {
    if (hits[v] > 0) total += family[v].PrefixSum(hits[v]);
  }
  return total;
}

RestrictedFamily Restrict(const OwaFamily& family, const ProfileGraph& g,
                          std::span<const CandidateIndex> committee) {
  CheckAligned(g, family);
  const std::vector<int> hits = HitCounts(g, committee);
  std::vector<OwaVector> vectors;
  std::vector<bool> exhausted(g.num_voters(), false);
  vectors.reserve(g.num_voters());
  for (VoterIndex v = 0; v < g.num_voters(); ++v) {
    vectors.push_back(family[v].WithoutPrefix(hits[v]));
    exhausted[v] = vectors.back().empty() || vectors.back().IsAllZero();
  }
  return {OwaFamily(std::move(vectors)), std::move(exhausted)};
}

Rational Marginal(const ProfileGraph& g, const OwaFamily& family,
                  std::span<const CandidateIndex> committee, CandidateIndex c) {
  CheckAligned(g, family);
  if (std::find(committee.begin(), committee.end(), c) != committee.end()) {
    throw Error(ErrorCode::kInvalidArgument,
                "candidate is already in the committee");
  }
  const std::vector<int> hits = HitCounts(g, committee);
  if (c < 0 || c >= g.num_candidates()) {
    throw Error(ErrorCode::kInvalidArgument, "unknown candidate index");
  }
  Rational gain(0);
  for (VoterIndex v : g.approvers(c)) gain += family[v].weight(hits[v] + 1);
  return gain;
}

std::vector<Rational> SingletonScores(const ProfileGraph& g, const OwaFamily& family) {
  CheckAligned(g, family);
  std::vector<Rational> out(g.num_candidates(), Rational(0));
  for (CandidateIndex c = 0; c < g.num_candidates(); ++c) {
    for (VoterIndex v : g.approvers(c)) out[c] += family[v].weight(1);
  }
  return out;
}

ScoreAccumulator::ScoreAccumulator(const ProfileGraph& g, const OwaFamily& family)
    : graph_(g), family_(family), hits_(g.num_voters(), 0), score_(0) {
  CheckAligned(g, family);
}

Rational ScoreAccumulator::Add(CandidateIndex c) {
  Rational gain(0);
  for (VoterIndex v : graph_.approvers(c)) gain += family_[v].weight(++hits_[v]);
  score_ += gain;
  return gain;
}

void ScoreAccumulator::Remove(CandidateIndex c) {
  for (VoterIndex v : graph_.approvers(c)) score_ -= family_[v].weight(hits_[v]--);
}

Rational ScoreAccumulator::Gain(CandidateIndex c) const {
  Rational gain(0);
  for (VoterIndex v : graph_.approvers(c)) gain += family_[v].weight(hits_[v] + 1);
  return gain;
}

void ScoreAccumulator::Reset() {
  std::fill(hits_.begin(), hits_.end(), 0);
  score_ = 0;
}

}  // namespace thiele
