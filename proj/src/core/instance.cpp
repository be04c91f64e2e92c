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


#include "thiele/instance.hpp"

#include "thiele/error.hpp"
#include "thiele/score.hpp"

namespace thiele {
namespace {

// Keeps voters with at least one approval and a vector that can still score,
// cutting every vector to |A_v|.
Instance Sanitize(const ProfileGraph& graph, const OwaFamily& family, int k,
                  std::optional<Rational> threshold, Rational unit) {
  std::vector<VoterIndex> keep;
  std::vector<OwaVector> vectors;
  for (VoterIndex v = 0; v < graph.num_voters(); ++v) {
    if (graph.voter_degree(v) == 0) continue;
    OwaVector cut = family[v].Truncated(graph.voter_degree(v));
    if (cut.empty() || cut.IsAllZero()) continue;
    keep.push_back(v);
    vectors.push_back(std::move(cut));
  }
  Instance out;
  out.graph = static_cast<int>(keep.size()) == graph.num_voters()
                  ? graph
                  : graph.SelectVoters(keep);
  out.family = OwaFamily(std::move(vectors));
  out.k = k;
  out.threshold = std::move(threshold);
  out.unit = std::move(unit);
  return out;
}

}  // namespace

Instance MakeInstance(const ProfileGraph& graph, const OwaFamily& family, int k,
                      std::optional<Rational> threshold) {
  if (k < 0) throw Error(ErrorCode::kInvalidInput, "k must be non-negative");
  if (static_cast<int>(family.size()) != graph.num_voters()) {
    throw Error(ErrorCode::kInvalidInput, "OWA family does not match the voters");
  }
  Instance out = Sanitize(graph, family, k, std::move(threshold), Rational(1));
  if (out.family.empty()) {
    // Vectors cut to nothing (k = 0 with a shared rule) are fine; a vector
    // that had room to score but only holds zeros is not.
    bool had_weights = false;
    for (VoterIndex v = 0; v < graph.num_voters(); ++v) {
      had_weights = had_weights || !family[v].Truncated(graph.voter_degree(v)).empty();
    }
    if (had_weights) {
      throw Error(ErrorCode::kInvalidInput,
                  "every OWA vector is zero; the instance has no score");
    }
    return out;
  }
  NormalizedFamily norm = Normalize(out.family, out.threshold);
  out.family = std::move(norm.family);
  out.threshold = std::move(norm.threshold);
  out.unit = std::move(norm.divisor);
  return out;
}

Instance KeepCandidates(const Instance& instance, const std::vector<bool>& keep) {
  if (static_cast<int>(keep.size()) != instance.graph.num_candidates()) {
    throw Error(ErrorCode::kInvalidArgument, "keep mask does not match candidates");
  }
  return Sanitize(instance.graph.KeepCandidates(keep), instance.family, instance.k,
                  instance.threshold, instance.unit);
}

Instance SelectVoters(const Instance& instance, std::span<const VoterIndex> voters) {
  std::vector<OwaVector> vectors;
  vectors.reserve(voters.size());
  for (VoterIndex v : voters) vectors.push_back(instance.family[v]);
  Instance out;
  out.graph = instance.graph.SelectVoters(voters);
  out.family = OwaFamily(std::move(vectors));
  out.k = instance.k;
  out.threshold = instance.threshold;
  out.unit = instance.unit;
  return out;
}

Rational ScoreOf(const Instance& instance, std::span<const CandidateIndex> committee) {
  return Score(instance.graph, instance.family, committee);
}

std::optional<OwaVector> SharedVector(const Instance& instance) {
  const ProfileGraph& g = instance.graph;
  const OwaFamily& family = instance.family;
  if (family.empty()) return OwaVector();
  std::size_t longest = 0;
  for (std::size_t v = 1; v < family.size(); ++v) {
    if (family[v].size() > family[longest].size()) longest = v;
  }
  const OwaVector lambda =
      family[longest].Truncated(static_cast<std::size_t>(std::max(instance.k, 0)));
  for (VoterIndex v = 0; v < g.num_voters(); ++v) {
    const auto reach = static_cast<std::size_t>(std::min(g.voter_degree(v), instance.k));
    if (!family[v].AgreesWith(lambda, reach)) return std::nullopt;
  }
  return lambda;
}

bool IsPav(const Instance& instance) {
  const std::optional<OwaVector> shared = SharedVector(instance);
  if (!shared) return false;
  std::size_t reach = 0;
  for (VoterIndex v = 0; v < instance.graph.num_voters(); ++v) {
    reach = std::max(reach, static_cast<std::size_t>(
                                std::min(instance.graph.voter_degree(v), instance.k)));
  }
  return shared->AgreesWith(OwaVector::Pav(reach), reach);
}

std::vector<CandidateIndex> ResolveCandidates(const ProfileGraph& graph,
                                              std::span<const std::string> ids) {
  std::vector<CandidateIndex> out;
  out.reserve(ids.size());
  for (const std::string& id : ids) {
    const std::optional<CandidateIndex> c = graph.FindCandidate(id);
    if (!c) throw Error(ErrorCode::kInvalidArgument, "unknown candidate \"" + id + "\"");
    out.push_back(*c);
  }
  return out;
}

std::vector<std::string> CandidateNames(const ProfileGraph& graph,
                                        std::span<const CandidateIndex> committee) {
  std::vector<std::string> out;
  out.reserve(committee.size());
  for (CandidateIndex c : committee) out.push_back(graph.candidate_id(c));
  return out;
}

}  // namespace thiele
