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

#include "thiele/profile_graph.hpp"

#include <algorithm>
#include <iterator>

#include "thiele/error.hpp"

namespace thiele {
namespace {

VoterSet Intersect(const VoterSet& a, const VoterSet& b) {
  VoterSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

}  // namespace

ProfileGraph::ProfileGraph(std::vector<std::string> candidate_ids,
                           std::vector<std::string> voter_ids,
                           std::vector<CandidateSet> approvals)
    : candidate_ids_(std::move(candidate_ids)),
      voter_ids_(std::move(voter_ids)),
      approvals_(std::move(approvals)) {
  if (approvals_.size() != voter_ids_.size()) {
    throw Error(ErrorCode::kInvalidInput, "approval lists do not match voter ids");
  }
  for (std::size_t c = 0; c < candidate_ids_.size(); ++c) {
    if (!candidate_lookup_.emplace(candidate_ids_[c], static_cast<CandidateIndex>(c))
             .second) {
      throw Error(ErrorCode::kInvalidInput,
                  "duplicate candidate id \"" + candidate_ids_[c] + "\"");
    }
  }
  {
    std::unordered_map<std::string, int> seen;
    for (const std::string& id : voter_ids_) {
      if (++seen[id] > 1) {
        throw Error(ErrorCode::kInvalidInput, "duplicate voter id \"" + id + "\"");
      }
    }
  }
  approvers_.assign(candidate_ids_.size(), {});
  for (std::size_t v = 0; v < approvals_.size(); ++v) {
    CandidateSet& a = approvals_[v];
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end()) {
      throw Error(ErrorCode::kInvalidInput,
                  "voter \"" + voter_ids_[v] + "\" approves a candidate twice");
    }
    for (CandidateIndex c : a) {
      if (c < 0 || c >= num_candidates()) {
        throw Error(ErrorCode::kInvalidInput,
                    "voter \"" + voter_ids_[v] + "\" approves an unknown candidate");
      }
      approvers_[c].push_back(static_cast<VoterIndex>(v));
    }
  }
}

std::optional<CandidateIndex> ProfileGraph::FindCandidate(const std::string& id) const {
  auto it = candidate_lookup_.find(id);
  if (it == candidate_lookup_.end()) return std::nullopt;
  return it->second;
}

bool ProfileGraph::Approves(VoterIndex v, CandidateIndex c) const {
  return std::binary_search(approvals_[v].begin(), approvals_[v].end(), c);
}

ProfileGraph ProfileGraph::KeepCandidates(const std::vector<bool>& keep) const {
  std::vector<CandidateIndex> remap(candidate_ids_.size(), -1);
  std::vector<std::string> ids;
  for (std::size_t c = 0; c < candidate_ids_.size(); ++c) {
    if (keep[c]) {
      remap[c] = static_cast<CandidateIndex>(ids.size());
      ids.push_back(candidate_ids_[c]);
    }
  }
  std::vector<CandidateSet> approvals(approvals_.size());
  for (std::size_t v = 0; v < approvals_.size(); ++v) {
    for (CandidateIndex c : approvals_[v]) {
      if (remap[c] >= 0) approvals[v].push_back(remap[c]);
    }
  }
  return ProfileGraph(std::move(ids), voter_ids_, std::move(approvals));
}

ProfileGraph ProfileGraph::SelectVoters(std::span<const VoterIndex> voters) const {
  std::vector<std::string> ids;
  std::vector<CandidateSet> approvals;
  ids.reserve(voters.size());
  approvals.reserve(voters.size());
  for (VoterIndex v : voters) {
    ids.push_back(voter_ids_[v]);
    approvals.push_back(approvals_[v]);
  }
  return ProfileGraph(candidate_ids_, std::move(ids), std::move(approvals));
}

int DegreeStats::EffectiveD() const {
  return d_determined ? d : std::min(delta_c, delta_v) + 1;
}

namespace {

bool ExtendBiclique(const ProfileGraph& g, const std::vector<CandidateIndex>& order,
                    std::size_t start, int remaining, const VoterSet& common, int b) {
  if (remaining == 0) return true;
  for (std::size_t i = start; i + remaining <= order.size(); ++i) {
    VoterSet next = Intersect(common, g.approvers(order[i]));
    if (static_cast<int>(next.size()) < b) continue;
    if (ExtendBiclique(g, order, i + 1, remaining - 1, next, b)) return true;
  }
  return false;
}

}  // namespace

bool ContainsBiclique(const ProfileGraph& g, int a, int b) {
  if (a <= 0 || b <= 0) return true;
  std::vector<CandidateIndex> order;
  for (CandidateIndex c = 0; c < g.num_candidates(); ++c) {
    if (g.candidate_degree(c) >= b) order.push_back(c);
  }
  if (static_cast<int>(order.size()) < a) return false;
  std::stable_sort(order.begin(), order.end(), [&](CandidateIndex x, CandidateIndex y) {
    return g.candidate_degree(x) > g.candidate_degree(y);
  });
  for (std::size_t i = 0; i + a <= order.size(); ++i) {
    if (ExtendBiclique(g, order, i + 1, a - 1, g.approvers(order[i]), b)) return true;
  }
  return false;
}

KddResult KddParameter(const ProfileGraph& g, int cap) {
  if (cap < 1) throw Error(ErrorCode::kInvalidArgument, "kdd cap must be >= 1");
  for (int d = 1; d <= cap; ++d) {
    if (!ContainsBiclique(g, d, d)) return {d, true};
  }
  return {cap + 1, false};
}

DegreeStats ComputeDegreeStats(const ProfileGraph& g, int cap) {
  DegreeStats stats;
  for (CandidateIndex c = 0; c < g.num_candidates(); ++c) {
    stats.delta_c = std::max(stats.delta_c, g.candidate_degree(c));
  }
  for (VoterIndex v = 0; v < g.num_voters(); ++v) {
    stats.delta_v = std::max(stats.delta_v, g.voter_degree(v));
  }
  const KddResult kdd = KddParameter(g, cap);
  stats.d = kdd.d;
  stats.d_determined = kdd.determined;
  return stats;
}

std::optional<Sunflower> FindSunflower(const ProfileGraph& g, int max_degree, int size) {
  std::vector<CandidateIndex> pool;
  for (CandidateIndex c = 0; c < g.num_candidates(); ++c) {
    if (g.candidate_degree(c) <= max_degree) pool.push_back(c);
  }
  VoterSet core;
  std::vector<bool> in_core(g.num_voters(), false);
  std::vector<bool> used(g.num_voters(), false);
  std::vector<int> hits(g.num_voters(), 0);

  // Each round either returns or moves one more voter into the core, and the
  // core is contained in every pooled neighborhood, so this terminates after
  // at most max_degree + 1 rounds.
  while (static_cast<int>(pool.size()) >= std::max(size, 1)) {
    std::fill(used.begin(), used.end(), false);
    CandidateSet collected;
    VoterSet petal_voters;
    for (CandidateIndex x : pool) {
      bool free = true;
      for (VoterIndex v : g.approvers(x)) {
        if (!in_core[v] && used[v]) {
          free = false;
          break;
        }
      }
      if (!free) continue;
      collected.push_back(x);
      for (VoterIndex v : g.approvers(x)) {
        if (!in_core[v]) {
          used[v] = true;
          petal_voters.push_back(v);
        }
      }
    }
    if (static_cast<int>(collected.size()) >= size) {
      return Sunflower{std::move(collected), core};
    }

    // Every pooled candidate outside `collected` has a petal meeting the
    // collected petals; pick the petal voter shared by the most of them.
    for (VoterIndex v : petal_voters) hits[v] = 0;
    for (CandidateIndex x : pool) {
      for (VoterIndex v : g.approvers(x)) {
        if (used[v]) ++hits[v];
      }
    }
    VoterIndex best = -1;
    std::sort(petal_voters.begin(), petal_voters.end());
    for (VoterIndex v : petal_voters) {
      if (best < 0 || hits[v] > hits[best]) best = v;
    }
    if (best < 0) return std::nullopt;

    std::vector<CandidateIndex> next;
    for (CandidateIndex x : pool) {
      if (g.Approves(best, x)) next.push_back(x);
    }
    pool = std::move(next);
    core.insert(std::upper_bound(core.begin(), core.end(), best), best);
    in_core[best] = true;
  }
  return std::nullopt;
}

CandidateSet HighDegreeSet(const ProfileGraph& g, const VoterSet& x,
                           const Rational& beta, int d) {
  std::vector<bool> in_x(g.num_voters(), false);
  for (VoterIndex v : x) in_x[v] = true;
  const Rational x_size(static_cast<long>(std::count(in_x.begin(), in_x.end(), true)));
  CandidateSet out;
  for (CandidateIndex c = 0; c < g.num_candidates(); ++c) {
    if (g.candidate_degree(c) < d) continue;
    long hits = 0;
    for (VoterIndex v : g.approvers(c)) hits += in_x[v] ? 1 : 0;
    if (beta * Rational(hits) >= x_size) out.push_back(c);
  }
  return out;
}

bool IsSunflower(const ProfileGraph& g, const Sunflower& s) {
  if (s.members.empty()) return false;
  VoterSet common = g.approvers(s.members.front());
  for (CandidateIndex x : s.members) common = Intersect(common, g.approvers(x));
  if (common != s.core) return false;
  for (std::size_t i = 0; i < s.members.size(); ++i) {
    for (std::size_t j = i + 1; j < s.members.size(); ++j) {
      if (Intersect(g.approvers(s.members[i]), g.approvers(s.members[j])) != s.core) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace thiele
