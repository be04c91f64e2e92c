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


#include "thiele/reductions.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <unordered_map>

#include "thiele/error.hpp"
#include "thiele/score.hpp"

namespace thiele {
namespace {

void CheckEpsilon(const Rational& eps) {
  if (eps <= 0 || eps >= 1) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon must lie strictly between 0 and 1");
  }
}

int ClampToInt(const Integer& value) {
  if (value > std::numeric_limits<int>::max()) return std::numeric_limits<int>::max();
  if (value < std::numeric_limits<int>::min()) return std::numeric_limits<int>::min();
  return static_cast<int>(value.get_si());
}

Instance KeepOnly(const Instance& instance, std::span<const CandidateIndex> members) {
  std::vector<bool> keep(instance.graph.num_candidates(), false);
  for (CandidateIndex c : members) keep[c] = true;
  return KeepCandidates(instance, keep);
}

Instance Delete(const Instance& instance, CandidateIndex c) {
  std::vector<bool> keep(instance.graph.num_candidates(), true);
  keep[c] = false;
  return KeepCandidates(instance, keep);
}

// Voters grouped by approval set, groups in order of first appearance.
std::vector<std::vector<VoterIndex>> GroupVoters(const ProfileGraph& g) {
  std::map<CandidateSet, std::size_t> slot;
  std::vector<std::vector<VoterIndex>> groups;
  for (VoterIndex v = 0; v < g.num_voters(); ++v) {
    auto [it, fresh] = slot.emplace(g.approvals(v), groups.size());
    if (fresh) groups.emplace_back();
    groups[it->second].push_back(v);
  }
  return groups;
}

Instance KeepVoterPrefixes(const Instance& instance,
                           const std::vector<std::vector<VoterIndex>>& groups,
                           const std::vector<int64_t>& kept) {
  std::vector<bool> keep(instance.graph.num_voters(), false);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (int64_t j = 0; j < kept[i]; ++j) keep[groups[i][j]] = true;
  }
  std::vector<VoterIndex> selected;
  for (VoterIndex v = 0; v < instance.graph.num_voters(); ++v) {
    if (keep[v]) selected.push_back(v);
  }
  return SelectVoters(instance, selected);
}

}  // namespace

const char* CandidateCaseName(CandidateCase c) {
  switch (c) {
    case CandidateCase::kSkipped: return "skipped";
    case CandidateCase::kLowThreshold: return "low-threshold";
    case CandidateCase::kHighThreshold: return "high-threshold";
  }
  return "unknown";
}

SunflowerResult ApplySunflowerRule(const Instance& instance, const Rational& W,
                                   const Integer& w, bool exhaustive) {
  if (w < 2) throw Error(ErrorCode::kInvalidArgument, "sunflower size must be at least 2");
  SunflowerResult out{instance, {}};
  if (W < 0) return out;
  const int max_degree = ClampToInt(Floor(W));
  while (w <= out.instance.graph.num_candidates()) {
    const Instance& cur = out.instance;
    const std::optional<Sunflower> flower =
        FindSunflower(cur.graph, max_degree, static_cast<int>(w.get_si()));
    if (!flower) break;
    const std::vector<Rational> singles = SingletonScores(cur.graph, cur.family);
    CandidateIndex victim = flower->members.front();
    for (CandidateIndex c : flower->members) {
      if (singles[c] < singles[victim] || (singles[c] == singles[victim] && c < victim)) {
        victim = c;
      }
    }
    SunflowerDeletion del;
    del.deleted = cur.graph.candidate_id(victim);
    del.members = CandidateNames(cur.graph, flower->members);
    for (VoterIndex v : flower->core) del.core.push_back(cur.graph.voter_id(v));
    out.deletions.push_back(std::move(del));
    out.instance = Delete(cur, victim);
    if (!exhaustive) break;
  }
  return out;
}

CandidateStageResult ReduceCandidates(const Instance& instance, const Rational& eps,
                                      int d, const Overrides& overrides) {
  CheckEpsilon(eps);
  CandidateStageResult out{instance, {}};
  CandidateStageTrace& tr = out.trace;
  tr.epsilon = eps;
  tr.d = d;
  tr.candidates_before = instance.graph.num_candidates();
  tr.candidates_after = tr.candidates_before;
  if (instance.k == 0 || instance.family.empty()) return out;

  const int k = instance.k;
  const Rational lambda_min = instance.family.LambdaMin();
  tr.apx_opt = Greedy(instance).score;
  tr.r = Rational(4 * d * k) / (eps * lambda_min) + k;
  tr.keep = overrides.r ? *overrides.r : ToInt64(Ceil(tr.r));
  const Rational r = overrides.r ? Rational(*overrides.r) : tr.r;
  tr.t_star = Rational(2 * k) * Pow(r, d) * (d - 1) / ((r - k) * eps);

  if (tr.apx_opt > tr.t_star) {
    tr.case_taken = CandidateCase::kHighThreshold;
    if (tr.keep < instance.graph.num_candidates()) {
      CandidateSet top = TopBySingletonScore(instance, tr.keep);
      std::sort(top.begin(), top.end());
      tr.kept = CandidateNames(instance.graph, top);
      out.instance = KeepOnly(instance, top);
    }
  } else {
    tr.case_taken = CandidateCase::kLowThreshold;
    tr.psi = Ceil(EOverEMinusOneUpperBound() * tr.t_star);
    const Rational degree_cut = Rational(tr.psi) / lambda_min;
    tr.W = overrides.W ? *overrides.W : degree_cut;
    tr.w = overrides.w ? Integer(static_cast<long>(*overrides.w)) : Floor(tr.W) * k + 1;
    if (!overrides.W) {
      for (CandidateIndex c = 0; c < instance.graph.num_candidates(); ++c) {
        if (instance.graph.candidate_degree(c) >= degree_cut) {
          tr.certified = instance.graph.candidate_id(c);
          const CandidateIndex only[] = {c};
          out.instance = KeepOnly(instance, only);
          break;
        }
      }
    }
    if (!tr.certified) {
      SunflowerResult sr = ApplySunflowerRule(instance, tr.W, tr.w, true);
      out.instance = std::move(sr.instance);
      tr.deletions = std::move(sr.deletions);
    }
  }
  tr.candidates_after = out.instance.graph.num_candidates();
  return out;
}

VoterStageResult ReduceVoters(const Instance& instance, const Rational& eps, int d) {
  CheckEpsilon(eps);
  VoterStageResult out{instance, {}};
  VoterStageTrace& tr = out.trace;
  const ProfileGraph& g = instance.graph;
  tr.epsilon = eps;
  tr.d = d;
  tr.n = g.num_candidates();
  tr.voters_before = g.num_voters();
  tr.epsilon_tilde = eps / 2;
  tr.epsilon_star = OneMinusInvELowerBound() * tr.epsilon_tilde;
  tr.effective_scale = 1;

  const std::vector<std::vector<VoterIndex>> groups = GroupVoters(g);
  for (const auto& group : groups) {
    for (VoterIndex v : group) {
      if (!(instance.family[v] == instance.family[group.front()])) {
        throw Error(ErrorCode::kInvalidInput,
                    "voters \"" + g.voter_id(group.front()) + "\" and \"" +
                        g.voter_id(v) +
                        "\" share an approval set but not an OWA vector");
      }
    }
  }

  if (instance.k > 0 && tr.n > 0 && !instance.family.empty()) {
    tr.apx_opt = Greedy(instance).score;
    tr.scale = tr.epsilon_star * tr.apx_opt /
               (Rational(instance.k) * 10 * d * Pow(Rational(tr.n), d));
  }
  if (tr.scale > 1) tr.effective_scale = tr.scale;

  std::vector<int64_t> kept;
  for (const auto& group : groups) {
    const auto m = static_cast<int64_t>(group.size());
    const int64_t copies =
        tr.scale > 1 ? ToInt64(Floor(Rational(static_cast<long>(m)) / tr.scale)) : m;
    kept.push_back(copies);
    tr.groups.push_back({g.voter_id(group.front()), m, copies});
  }
  if (tr.scale > 1) {
    out.instance = KeepVoterPrefixes(instance, groups, kept);
    out.instance.unit = instance.unit * tr.effective_scale;
    if (instance.threshold) out.instance.threshold = *instance.threshold / tr.effective_scale;
  }
  tr.voters_after = out.instance.graph.num_voters();
  return out;
}

KernelResult Kernelize(const Instance& instance, const Rational& eps, int d,
                       const Overrides& overrides) {
  CheckEpsilon(eps);
  CandidateStageResult cand = ReduceCandidates(instance, eps / 2, d, overrides);
  VoterStageResult vot = ReduceVoters(cand.instance, eps / 2, d);
  KernelResult out{std::move(vot.instance), {}};
  out.instance.threshold.reset();
  out.trace.epsilon = eps;
  out.trace.candidates = std::move(cand.trace);
  out.trace.voters = std::move(vot.trace);
  return out;
}

Instance ReplayTrace(const Instance& original, const KernelTrace& trace) {
  Instance cur = original;
  const CandidateStageTrace& ct = trace.candidates;
  if (ct.certified) {
    const CandidateIndex only[] = {ResolveCandidates(cur.graph, {&*ct.certified, 1})[0]};
    cur = KeepOnly(cur, only);
  } else if (ct.case_taken == CandidateCase::kHighThreshold && !ct.kept.empty()) {
    cur = KeepOnly(cur, ResolveCandidates(cur.graph, ct.kept));
  } else {
    for (const SunflowerDeletion& del : ct.deletions) {
      cur = Delete(cur, ResolveCandidates(cur.graph, {&del.deleted, 1})[0]);
    }
  }

  const VoterStageTrace& vt = trace.voters;
  if (vt.effective_scale != 1 || vt.scale > 1) {
    const std::vector<std::vector<VoterIndex>> groups = GroupVoters(cur.graph);
    std::unordered_map<std::string, std::size_t> group_of;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      for (VoterIndex v : groups[i]) group_of[cur.graph.voter_id(v)] = i;
    }
    std::vector<int64_t> kept(groups.size(), 0);
    for (const VoterGroup& vg : vt.groups) {
      auto it = group_of.find(vg.representative);
      if (it == group_of.end() ||
          static_cast<int64_t>(groups[it->second].size()) != vg.multiplicity) {
        throw Error(ErrorCode::kInvalidArgument,
                    "trace does not match the instance at voter \"" + vg.representative +
                        "\"");
      }
      kept[it->second] = vg.kept;
    }
    cur = KeepVoterPrefixes(cur, groups, kept);
    cur.unit *= vt.effective_scale;
  }
  cur.threshold.reset();
  return cur;
}

Committee Lift(const Committee& solution, const Instance& kernel,
               const Instance& original) {
  const std::vector<std::string> names = CandidateNames(kernel.graph, solution.members);
  Committee out;
  out.members = ResolveCandidates(original.graph, names);
  std::sort(out.members.begin(), out.members.end());
  out.score = ScoreOf(original, out.members);
  out.size_bound = solution.size_bound;
  return out;
}

}  // namespace thiele
