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


#include "thiele/generators.hpp"

#include <algorithm>
#include <random>
#include <map>
#include <set>

#include "thiele/error.hpp"

namespace thiele {
namespace {

std::string PaddedId(char prefix, int index, int count) {
  std::string digits = std::to_string(index + 1);
  const std::size_t width = std::to_string(std::max(count, 1)).size();
  return std::string(1, prefix) + std::string(width - digits.size(), '0') + digits;
}

int Uniform(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

OwaVector RandomOwa(std::mt19937_64& rng, std::size_t length) {
  std::vector<Rational> w;
  Rational cur = Ratio(Uniform(rng, 1, 4), 4);
  for (std::size_t i = 0; i < length; ++i) {
    w.push_back(cur);
    cur *= Ratio(Uniform(rng, 0, 4), 4);
  }
  return OwaVector(std::move(w));
}

OwaVector RuleVector(RuleKind rule, std::size_t approvals, int k, std::mt19937_64& rng) {
  const std::size_t cut = std::min<std::size_t>(approvals, static_cast<std::size_t>(k));
  switch (rule) {
    case RuleKind::kPav: return OwaVector::Pav(cut);
    case RuleKind::kCc: return OwaVector::ChamberlinCourant(cut);
    case RuleKind::kAv: return OwaVector::Approval(cut);
    case RuleKind::kRandomOwa: return RandomOwa(rng, approvals);
  }
  return {};
}

// Adding c to a voter that already approves `current` closes a K_{d,d} iff
// some d - 1 of `current` together with c share d - 1 other voters.
bool ClosesBiclique(const std::vector<std::vector<int>>& approvers,
                    const std::vector<int>& current, int d, int depth,
                    std::size_t start, const std::vector<int>& common) {
  if (static_cast<int>(common.size()) < d - 1) return false;
  if (depth == d - 1) return true;
  for (std::size_t i = start; i < current.size(); ++i) {
    std::vector<int> next;
    const std::vector<int>& nx = approvers[current[i]];
    std::set_intersection(common.begin(), common.end(), nx.begin(), nx.end(),
                          std::back_inserter(next));
    if (ClosesBiclique(approvers, current, d, depth + 1, i + 1, next)) return true;
  }
  return false;
}

}  // namespace

const char* RuleKindName(RuleKind kind) {
  switch (kind) {
    case RuleKind::kPav: return "pav";
    case RuleKind::kCc: return "cc";
    case RuleKind::kAv: return "av";
    case RuleKind::kRandomOwa: return "random-owa";
  }
  return "unknown";
}

RuleKind ParseRuleKind(const std::string& name) {
  for (RuleKind kind : {RuleKind::kPav, RuleKind::kCc, RuleKind::kAv, RuleKind::kRandomOwa}) {
    if (name == RuleKindName(kind)) return kind;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown rule \"" + name + "\"");
}

Instance GenKddFree(const GeneratorSpec& spec) {
  if (spec.d < 2) throw Error(ErrorCode::kInvalidArgument, "generator needs d >= 2");
  if (spec.candidates < 1 || spec.voters < 0 || spec.max_voter_degree < 1 || spec.k < 0) {
    throw Error(ErrorCode::kInvalidArgument, "generator sizes out of range");
  }
  std::mt19937_64 rng(spec.seed);
  const int m = spec.candidates;
  std::vector<std::vector<int>> approvers(m);
  std::vector<CandidateSet> approvals;
  std::set<CandidateSet> used_sets;
  const bool distinct = !spec.duplicate_groups.empty();

  for (int v = 0; v < spec.voters; ++v) {
    bool placed = false;
    for (int attempt = 0; attempt < spec.max_attempts && !placed; ++attempt) {
      const int want = Uniform(rng, 1, std::min(spec.max_voter_degree, m));
      std::vector<int> order(m);
      for (int c = 0; c < m; ++c) order[c] = c;
      std::shuffle(order.begin(), order.end(), rng);
      std::vector<int> chosen;
      for (int c : order) {
        if (static_cast<int>(chosen.size()) == want) break;
        const std::vector<int>& common = approvers[c];
        if (ClosesBiclique(approvers, chosen, spec.d, 0, 0, common)) continue;
        chosen.push_back(c);
      }
      std::sort(chosen.begin(), chosen.end());
      CandidateSet set(chosen.begin(), chosen.end());
      if (set.empty() || (distinct && used_sets.count(set))) continue;
      for (int c : chosen) approvers[c].push_back(v);
      used_sets.insert(set);
      approvals.push_back(std::move(set));
      placed = true;
    }
    if (!placed) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "could not place voter " + std::to_string(v + 1) + " within " +
                      std::to_string(spec.max_attempts) + " attempts");
    }
  }

  std::vector<std::size_t> group_of(approvals.size(), 0);
  std::vector<std::size_t> group_sizes(approvals.size(), 1);
  for (int multiplicity : spec.duplicate_groups) {
    if (multiplicity < 1) throw Error(ErrorCode::kInvalidArgument, "duplicate group must be >= 1");
    bool placed = false;
    for (int attempt = 0; attempt < spec.max_attempts && !placed; ++attempt) {
      const int size = Uniform(rng, 1, std::min(spec.d - 1, m));
      std::vector<int> order(m);
      for (int c = 0; c < m; ++c) order[c] = c;
      std::shuffle(order.begin(), order.end(), rng);
      CandidateSet set(order.begin(), order.begin() + size);
      std::sort(set.begin(), set.end());
      if (used_sets.count(set)) continue;
      used_sets.insert(set);
      for (int i = 0; i < multiplicity; ++i) approvals.push_back(set);
      placed = true;
    }
    if (!placed) {
      throw Error(ErrorCode::kBudgetExceeded, "no free approval set for a duplicate group");
    }
  }

  const int n = static_cast<int>(approvals.size());
  std::vector<std::string> candidate_ids;
  for (int c = 0; c < m; ++c) candidate_ids.push_back(PaddedId('c', c, m));
  std::vector<std::string> voter_ids;
  for (int v = 0; v < n; ++v) voter_ids.push_back(PaddedId('v', v, n));

  // One vector per approval set so duplicates always agree.
  std::vector<OwaVector> vectors;
  std::map<CandidateSet, OwaVector> by_set;
  for (const CandidateSet& a : approvals) {
    auto it = by_set.find(a);
    if (it == by_set.end()) {
      it = by_set.emplace(a, RuleVector(spec.rule, a.size(), spec.k, rng)).first;
    }
    vectors.push_back(it->second);
  }

  ProfileGraph graph(std::move(candidate_ids), std::move(voter_ids), std::move(approvals));
  if (ContainsBiclique(graph, spec.d, spec.d)) {
    throw Error(ErrorCode::kInternal, "generated graph contains K_{d,d}");
  }
  return MakeInstance(graph, OwaFamily(std::move(vectors)), spec.k, spec.threshold);
}

SunflowerFixture GenSunflowerFixture(const SunflowerSpec& spec) {
  if (spec.w < 2 || spec.core_size < 0 || spec.max_petal < 1 || spec.noise < 0) {
    throw Error(ErrorCode::kInvalidArgument, "sunflower fixture sizes out of range");
  }
  std::mt19937_64 rng(spec.seed);
  const int m = spec.w + spec.noise;
  std::vector<CandidateSet> approvals;
  // Core voters approve exactly the members.
  CandidateSet members(spec.w);
  for (int i = 0; i < spec.w; ++i) members[i] = i;
  for (int i = 0; i < spec.core_size; ++i) approvals.push_back(members);
  // Petal voters approve one member and possibly one noise candidate; the
  // noise candidate is never shared with another member's petal.
  std::vector<int> noise_owner(spec.noise, -1);
  for (int x = 0; x < spec.w; ++x) {
    const int petal = Uniform(rng, 1, spec.max_petal);
    for (int p = 0; p < petal; ++p) {
      CandidateSet a = {x};
      if (spec.noise > 0 && rng() % 2 == 0) {
        const int z = Uniform(rng, 0, spec.noise - 1);
        if (noise_owner[z] < 0 || noise_owner[z] == x) {
          noise_owner[z] = x;
          a.push_back(spec.w + z);
        }
      }
      approvals.push_back(std::move(a));
    }
  }
  for (int z = 0; z < spec.noise; ++z) {
    const int own = Uniform(rng, 0, 2);
    for (int i = 0; i < own; ++i) approvals.push_back({spec.w + z});
  }

  const int n = static_cast<int>(approvals.size());
  std::vector<std::string> candidate_ids;
  for (int c = 0; c < m; ++c) candidate_ids.push_back(PaddedId('c', c, m));
  std::vector<std::string> voter_ids;
  for (int v = 0; v < n; ++v) voter_ids.push_back(PaddedId('v', v, n));
  std::vector<OwaVector> vectors;
  for (const CandidateSet& a : approvals) {
    vectors.push_back(RuleVector(spec.rule, a.size(), spec.k, rng));
  }
  ProfileGraph graph(std::move(candidate_ids), std::move(voter_ids), std::move(approvals));
  SunflowerFixture out;
  out.instance = MakeInstance(graph, OwaFamily(std::move(vectors)), spec.k, std::nullopt);
  out.members = members;
  for (int i = 0; i < spec.core_size; ++i) out.core.push_back(i);
  return out;
}

}  // namespace thiele
