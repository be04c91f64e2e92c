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

#ifndef THIELE_PROFILE_GRAPH_HPP_
#define THIELE_PROFILE_GRAPH_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "thiele/rational.hpp"

namespace thiele {

using CandidateIndex = int32_t;
using VoterIndex = int32_t;

// Sorted, duplicate-free.
using CandidateSet = std::vector<CandidateIndex>;
using VoterSet = std::vector<VoterIndex>;

// Bipartite approval structure. Candidates and voters are dense indices in
// document order; the string ids are kept for I/O and for mapping solutions
// between an instance and its reductions. Immutable once built.
class ProfileGraph {
 public:
  ProfileGraph() = default;

  // `approvals[v]` lists candidate indices approved by voter v. Throws
  // Error(kInvalidInput) on duplicate ids, out-of-range or repeated
  // approvals.
  ProfileGraph(std::vector<std::string> candidate_ids,
               std::vector<std::string> voter_ids,
               std::vector<CandidateSet> approvals);

  int num_candidates() const { return static_cast<int>(candidate_ids_.size()); }
  int num_voters() const { return static_cast<int>(voter_ids_.size()); }

  const std::string& candidate_id(CandidateIndex c) const { return candidate_ids_[c]; }
  const std::string& voter_id(VoterIndex v) const { return voter_ids_[v]; }
  const std::vector<std::string>& candidate_ids() const { return candidate_ids_; }
  const std::vector<std::string>& voter_ids() const { return voter_ids_; }

  std::optional<CandidateIndex> FindCandidate(const std::string& id) const;

  // A_v and N(c).
  const CandidateSet& approvals(VoterIndex v) const { return approvals_[v]; }
  const VoterSet& approvers(CandidateIndex c) const { return approvers_[c]; }

  int candidate_degree(CandidateIndex c) const {
    return static_cast<int>(approvers_[c].size());
  }
  int voter_degree(VoterIndex v) const { return static_cast<int>(approvals_[v].size()); }

  bool Approves(VoterIndex v, CandidateIndex c) const;

  // Graph on the candidates with keep[c] set; voters are untouched, so some
  // may end up with no approvals.
  ProfileGraph KeepCandidates(const std::vector<bool>& keep) const;
  // Graph on the listed voters, in the listed order.
  ProfileGraph SelectVoters(std::span<const VoterIndex> voters) const;

  friend bool operator==(const ProfileGraph& a, const ProfileGraph& b) {
    return a.candidate_ids_ == b.candidate_ids_ && a.voter_ids_ == b.voter_ids_ &&
           a.approvals_ == b.approvals_;
  }

 private:
  std::vector<std::string> candidate_ids_;
  std::vector<std::string> voter_ids_;
  std::vector<CandidateSet> approvals_;
  std::vector<VoterSet> approvers_;
  std::unordered_map<std::string, CandidateIndex> candidate_lookup_;
};

// Members pairwise intersect exactly in `core`.
struct Sunflower {
  CandidateSet members;
  VoterSet core;
};

struct DegreeStats {
  int delta_c = 0;  // max candidate degree
  int delta_v = 0;  // max voter degree
  int d = 1;        // smallest d with no K_{d,d}, or cap + 1
  bool d_determined = true;

  // A d for which the graph is certainly K_{d,d}-free: the computed one, or
  // min(delta_c, delta_v) + 1 when the search stopped at the cap.
  int EffectiveD() const;
};

// True iff some `a` candidates are all approved by the same `b` voters.
bool ContainsBiclique(const ProfileGraph& g, int a, int b);

struct KddResult {
  int d = 1;
  bool determined = true;
};

inline constexpr int kDefaultKddCap = 4;

// Smallest d <= cap such that the graph has no K_{d,d}; {cap + 1, false}
// when every d up to cap is present.
KddResult KddParameter(const ProfileGraph& g, int cap = kDefaultKddCap);

DegreeStats ComputeDegreeStats(const ProfileGraph& g, int cap = kDefaultKddCap);

// Constructive sunflower search over the candidates of degree <= max_degree.
// Returns a sunflower with at least `size` members, or nothing. Guaranteed
// to succeed on K_{d,d}-free graphs with at least
// d * ((size - 1) * max_degree)^d such candidates.
std::optional<Sunflower> FindSunflower(const ProfileGraph& g, int max_degree, int size);

// Candidates c with |N(c)| >= d and beta * |N(c) ∩ X| >= |X|.
CandidateSet HighDegreeSet(const ProfileGraph& g, const VoterSet& x,
                           const Rational& beta, int d);

// Direct check of the sunflower definition.
bool IsSunflower(const ProfileGraph& g, const Sunflower& s);

}  // namespace thiele

#endif  // THIELE_PROFILE_GRAPH_HPP_
