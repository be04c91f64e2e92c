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


#include "thiele/solvers.hpp"

#include <algorithm>
#include <numeric>

#include "thiele/error.hpp"
#include "thiele/reductions.hpp"
#include "thiele/score.hpp"

namespace thiele {
namespace {

void RequireThreshold(const Instance& instance, const char* solver) {
  if (!instance.threshold) {
    throw Error(ErrorCode::kInvalidArgument, std::string(solver) + " needs a threshold t");
  }
}

Integer Binomial(int n, int r) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(r));
  return out;
}

CandidateSet AllCandidates(const Instance& instance) {
  CandidateSet all(instance.graph.num_candidates());
  std::iota(all.begin(), all.end(), 0);
  return all;
}

class SubsetSearch {
 public:
  SubsetSearch(const Instance& instance, std::span<const CandidateIndex> pool, int size,
               RunStats& stats)
      : pool_(pool), size_(size), acc_(instance.graph, instance.family), stats_(stats) {}

  Committee Run() {
    Recurse(0);
    Committee out;
    out.members = best_;
    std::sort(out.members.begin(), out.members.end());
    out.score = best_score_;
    out.size_bound = size_;
    return out;
  }

 private:
  void Recurse(std::size_t start) {
    if (static_cast<int>(chosen_.size()) == size_) {
      ++stats_.subsets_examined;
      if (!found_ || acc_.score() > best_score_) {
        found_ = true;
        best_score_ = acc_.score();
        best_ = chosen_;
      }
      return;
    }
    const std::size_t need = size_ - chosen_.size();
    for (std::size_t i = start; i + need <= pool_.size(); ++i) {
      chosen_.push_back(pool_[i]);
      acc_.Add(pool_[i]);
      Recurse(i + 1);
      acc_.Remove(pool_[i]);
      chosen_.pop_back();
    }
  }

  std::span<const CandidateIndex> pool_;
  int size_;
  ScoreAccumulator acc_;
  RunStats& stats_;
  std::vector<CandidateIndex> chosen_;
  std::vector<CandidateIndex> best_;
  Rational best_score_;
  bool found_ = false;
};

SolveOutcome Decide(Committee committee, const std::optional<Rational>& t,
                    RunStats stats) {
  SolveOutcome out;
  out.stats = std::move(stats);
  if (!t || committee.score >= *t) out.committee = std::move(committee);
  return out;
}

Committee EmptyCommittee(int bound) {
  Committee c;
  c.score = 0;
  c.size_bound = bound;
  return c;
}

// Some candidate alone reaches t when its degree is at least t / lambda_min.
std::optional<CandidateIndex> DegreeShortcut(const Instance& instance,
                                             const Rational& degree_cut) {
  for (CandidateIndex c = 0; c < instance.graph.num_candidates(); ++c) {
    if (instance.graph.candidate_degree(c) >= degree_cut) return c;
  }
  return std::nullopt;
}

Committee Single(const Instance& instance, CandidateIndex c, int bound) {
  Committee out;
  out.members = {c};
  out.score = ScoreOf(instance, out.members);
  out.size_bound = bound;
  return out;
}

// Committee found on a reduced copy, mapped back by id and rescored.
Committee MapBack(const Committee& found, const Instance& reduced,
                  const Instance& instance) {
  return Lift(found, reduced, instance);
}

}  // namespace

Committee ExhaustiveSearch(const Instance& instance, std::span<const CandidateIndex> pool,
                           const Budget& budget, RunStats& stats) {
  const int size = std::min<int>(instance.k, static_cast<int>(pool.size()));
  if (Binomial(static_cast<int>(pool.size()), size) > budget.max_subsets) {
    throw Error(ErrorCode::kBudgetExceeded,
                "exhaustive search over C(" + std::to_string(pool.size()) + ", " +
                    std::to_string(size) + ") subsets exceeds the budget of " +
                    std::to_string(budget.max_subsets));
  }
  return SubsetSearch(instance, pool, size, stats).Run();
}

SolveOutcome BruteForce(const Instance& instance, const Budget& budget) {
  RunStats stats;
  const CandidateSet all = AllCandidates(instance);
  Committee best = ExhaustiveSearch(instance, all, budget, stats);
  best.size_bound = instance.k;
  return Decide(std::move(best), instance.threshold, std::move(stats));
}

Committee Greedy(const Instance& instance) {
  ScoreAccumulator acc(instance.graph, instance.family);
  const int m = instance.graph.num_candidates();
  std::vector<bool> taken(m, false);
  Committee out;
  out.size_bound = instance.k;
  for (int round = 0; round < CommitteeBound(instance); ++round) {
    CandidateIndex best = -1;
    Rational best_gain;
    for (CandidateIndex c = 0; c < m; ++c) {
      if (taken[c]) continue;
      Rational gain = acc.Gain(c);
      if (best < 0 || gain > best_gain) {
        best = c;
        best_gain = std::move(gain);
      }
    }
    taken[best] = true;
    acc.Add(best);
    out.members.push_back(best);
  }
  std::sort(out.members.begin(), out.members.end());
  out.score = acc.score();
  return out;
}

CandidateSet TopBySingletonScore(const Instance& instance, int64_t count) {
  const std::vector<Rational> singles = SingletonScores(instance.graph, instance.family);
  CandidateSet order = AllCandidates(instance);
  std::stable_sort(order.begin(), order.end(), [&](CandidateIndex a, CandidateIndex b) {
    return singles[a] > singles[b];
  });
  if (count < static_cast<int64_t>(order.size())) order.resize(std::max<int64_t>(count, 0));
  return order;
}

SolveOutcome Fptas(const Instance& instance, const Rational& eps, int d,
                   const Overrides& overrides, const Budget& budget) {
  RequireThreshold(instance, "fptas");
  if (eps <= 0 || eps >= 1) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon must lie strictly between 0 and 1");
  }
  const Rational& t = *instance.threshold;
  const int k = instance.k;
  RunStats stats;
  if (t <= 0) {
    stats.events.push_back("fptas:trivial-threshold");
    return Decide(EmptyCommittee(k), t, std::move(stats));
  }
  if (k == 0 || instance.family.empty()) {
    stats.events.push_back("fptas:nothing-scores");
    return Decide(EmptyCommittee(k), t, std::move(stats));
  }

  const Rational lambda_min = instance.family.LambdaMin();
  const Rational r_formula = Rational(4 * d * k) / (eps * lambda_min) + k;
  const int64_t keep = overrides.r ? *overrides.r : ToInt64(Ceil(r_formula));
  const Rational r = overrides.r ? Rational(*overrides.r) : r_formula;
  const Rational t_star = Rational(2 * k) * Pow(r, d) * (d - 1) / ((r - k) * eps);
  const bool low = t <= t_star;
  const Rational accept = low ? t : (1 - eps) * t;

  if (!overrides.any() && keep >= instance.graph.num_candidates()) {
    stats.events.push_back(low ? "fptas:low-threshold:exhaustive"
                               : "fptas:high-threshold:exhaustive");
    const CandidateSet all = AllCandidates(instance);
    Committee best = ExhaustiveSearch(instance, all, budget, stats);
    best.size_bound = k;
    return Decide(std::move(best), accept, std::move(stats));
  }

  if (low) {
    stats.events.push_back("fptas:low-threshold");
    if (std::optional<CandidateIndex> v = DegreeShortcut(instance, t / lambda_min)) {
      ++stats.degree_shortcuts;
      return Decide(Single(instance, *v, k), t, std::move(stats));
    }
    const Rational W = overrides.W ? *overrides.W : t_star / lambda_min;
    const Integer w =
        overrides.w ? Integer(static_cast<long>(*overrides.w)) : Floor(W) * k + 1;
    SunflowerResult reduced = ApplySunflowerRule(instance, W, w, true);
    stats.sunflower_deletions += static_cast<int64_t>(reduced.deletions.size());
    const CandidateSet all = AllCandidates(reduced.instance);
    Committee best = ExhaustiveSearch(reduced.instance, all, budget, stats);
    best = MapBack(best, reduced.instance, instance);
    best.size_bound = k;
    return Decide(std::move(best), t, std::move(stats));
  }

  stats.events.push_back("fptas:high-threshold");
  CandidateSet top = TopBySingletonScore(instance, keep);
  std::sort(top.begin(), top.end());
  Committee best = ExhaustiveSearch(instance, top, budget, stats);
  best.size_bound = k;
  return Decide(std::move(best), accept, std::move(stats));
}

namespace {

struct AdditiveContext {
  int d;
  const Budget& budget;
  RunStats& stats;
};

std::optional<Committee> AdditiveRec(const Instance& instance, AdditiveContext& ctx) {
  if (++ctx.stats.recursive_calls > ctx.budget.max_recursive_calls) {
    throw Error(ErrorCode::kBudgetExceeded, "additive recursion exceeds the call budget");
  }
  const Rational& t = *instance.threshold;
  const int k = instance.k;
  const int d = ctx.d;
  if (k == 0 || t <= 0) {
    if (t <= 0) return EmptyCommittee(k + 1);
    return std::nullopt;
  }
  if (instance.family.empty()) return std::nullopt;

  const int m = instance.graph.num_candidates();
  const Rational small_gate = Rational(k) * (d - 1) * Pow(Rational(4 * k * k), d - 1) + 1;
  if (m <= small_gate) {
    ctx.stats.events.push_back("additive:small-candidate-set");
    const CandidateSet all = AllCandidates(instance);
    Committee best = ExhaustiveSearch(instance, all, ctx.budget, ctx.stats);
    if (best.score >= t) return best;
    return std::nullopt;
  }

  const Rational lambda_min = instance.family.LambdaMin();
  if (t <= Rational(8) * k * k * k * k * d * lambda_min) {
    ctx.stats.events.push_back("additive:low-threshold");
    const Rational W = t / lambda_min;
    if (std::optional<CandidateIndex> v = DegreeShortcut(instance, W)) {
      ++ctx.stats.degree_shortcuts;
      return Single(instance, *v, k + 1);
    }
    SunflowerResult reduced = ApplySunflowerRule(instance, W, Floor(W) * k + 1, true);
    ctx.stats.sunflower_deletions += static_cast<int64_t>(reduced.deletions.size());
    const CandidateSet all = AllCandidates(reduced.instance);
    Committee best = ExhaustiveSearch(reduced.instance, all, ctx.budget, ctx.stats);
    if (best.score < t) return std::nullopt;
    return MapBack(best, reduced.instance, instance);
  }

  ctx.stats.events.push_back("additive:fptas");
  ++ctx.stats.fptas_calls;
  SolveOutcome apx = Fptas(instance, lambda_min / (4 * k), d, {}, ctx.budget);
  ctx.stats.subsets_examined += apx.stats.subsets_examined;
  ctx.stats.sunflower_deletions += apx.stats.sunflower_deletions;
  ctx.stats.degree_shortcuts += apx.stats.degree_shortcuts;
  if (apx.no_instance()) return std::nullopt;
  const CandidateSet& s_prime = apx.committee->members;

  const Rational h_size =
      Rational(k) * (d - 1) * Pow(Rational(4 * k * k) * lambda_min, d - 1) + 1;
  const CandidateSet h = TopBySingletonScore(instance, ToInt64(Ceil(h_size)));
  for (CandidateIndex x : h) {
    CandidateSet with_x = s_prime;
    if (!std::binary_search(with_x.begin(), with_x.end(), x)) {
      with_x.insert(std::upper_bound(with_x.begin(), with_x.end(), x), x);
    }
    Rational score = ScoreOf(instance, with_x);
    if (score >= t) {
      Committee out;
      out.members = std::move(with_x);
      out.score = std::move(score);
      out.size_bound = k + 1;
      return out;
    }
  }

  ctx.stats.events.push_back("additive:branch");
  const std::vector<Rational> singles = SingletonScores(instance.graph, instance.family);
  for (CandidateIndex y : h) {
    const CandidateIndex only[] = {y};
    RestrictedFamily restricted = Restrict(instance.family, instance.graph, only);
    std::vector<VoterIndex> live;
    for (VoterIndex v = 0; v < instance.graph.num_voters(); ++v) {
      if (!restricted.exhausted[v]) live.push_back(v);
    }
    Instance sub;
    sub.graph = instance.graph;
    sub.family = std::move(restricted.family);
    sub.k = k - 1;
    sub.threshold = t - singles[y];
    sub.unit = instance.unit;
    sub = SelectVoters(sub, live);
    std::vector<bool> keep(m, true);
    keep[y] = false;
    sub = KeepCandidates(sub, keep);
    std::optional<Committee> rest = AdditiveRec(sub, ctx);
    if (!rest) continue;
    std::vector<std::string> names = CandidateNames(sub.graph, rest->members);
    names.push_back(instance.graph.candidate_id(y));
    Committee out;
    out.members = ResolveCandidates(instance.graph, names);
    std::sort(out.members.begin(), out.members.end());
    out.score = ScoreOf(instance, out.members);
    out.size_bound = k + 1;
    return out;
  }
  return std::nullopt;
}

}  // namespace

SolveOutcome Additive(const Instance& instance, int d, const Budget& budget) {
  RequireThreshold(instance, "additive");
  SolveOutcome out;
  AdditiveContext ctx{d, budget, out.stats};
  out.committee = AdditiveRec(instance, ctx);
  if (out.committee) {
    out.committee->score = ScoreOf(instance, out.committee->members);
    out.committee->size_bound = instance.k + 1;
  }
  return out;
}

SolveOutcome PavDispatch(const Instance& instance, uint64_t seed,
                         std::optional<int64_t> reps, const Budget& budget) {
  RequireThreshold(instance, "pav");
  if (!IsPav(instance)) {
    throw Error(ErrorCode::kInvalidArgument, "pav dispatch needs the shared PAV vector");
  }
  const Rational& t = *instance.threshold;
  const int k = instance.k;
  const ProfileGraph& g = instance.graph;

  VoterIndex top = -1;
  for (VoterIndex v = 0; v < g.num_voters(); ++v) {
    if (top < 0 || g.voter_degree(v) > g.voter_degree(top)) top = v;
  }
  const int delta = top < 0 ? 0 : g.voter_degree(top);
  auto harmonic = [](int n) {
    Rational h(0);
    for (int i = 1; i <= n; ++i) h += Rational(1, i);
    return h;
  };

  if (k > t && top >= 0) {
    CandidateSet members;
    const char* label = nullptr;
    if (k <= delta && t <= harmonic(k)) {
      members.assign(g.approvals(top).begin(), g.approvals(top).begin() + k);
      label = "pav:harmonic-k";
    } else if (k > delta && t <= harmonic(delta)) {
      members = g.approvals(top);
      for (CandidateIndex c = 0;
           c < g.num_candidates() && static_cast<int>(members.size()) < k; ++c) {
        if (!std::binary_search(g.approvals(top).begin(), g.approvals(top).end(), c)) {
          members.push_back(c);
        }
      }
      std::sort(members.begin(), members.end());
      label = "pav:harmonic-delta";
    }
    if (label) {
      SolveOutcome out;
      out.stats.events.push_back(label);
      Committee c;
      c.members = std::move(members);
      c.score = ScoreOf(instance, c.members);
      c.size_bound = k;
      out.committee = std::move(c);
      return out;
    }
  }
  SolveOutcome out = ColorCoding(instance, seed, reps, budget);
  out.stats.events.insert(out.stats.events.begin(),
                          k <= t ? "pav:k-at-most-t" : "pav:fallback");
  return out;
}

SolveOutcome DecideByDelta(const Instance& instance, const Budget& budget) {
  int delta_c = 0;
  for (CandidateIndex c = 0; c < instance.graph.num_candidates(); ++c) {
    delta_c = std::max(delta_c, instance.graph.candidate_degree(c));
  }
  if (instance.threshold && *instance.threshold > Rational(instance.k) * delta_c) {
    SolveOutcome out;
    out.stats.events.push_back("delta:threshold-above-k-delta");
    return out;
  }
  SolveOutcome out = BruteForce(instance, budget);
  out.stats.events.push_back("delta:exhaustive");
  return out;
}

const char* SolverName(SolverKind kind) {
  switch (kind) {
    case SolverKind::kExact: return "exact";
    case SolverKind::kGreedy: return "greedy";
    case SolverKind::kFptas: return "fptas";
    case SolverKind::kAdditive: return "additive";
    case SolverKind::kColorCoding: return "colorcoding";
    case SolverKind::kPav: return "pav";
    case SolverKind::kDelta: return "delta";
  }
  return "unknown";
}

SolverKind ParseSolverKind(const std::string& name) {
  for (SolverKind kind : {SolverKind::kExact, SolverKind::kGreedy, SolverKind::kFptas,
                          SolverKind::kAdditive, SolverKind::kColorCoding,
                          SolverKind::kPav, SolverKind::kDelta}) {
    if (name == SolverName(kind)) return kind;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown solver \"" + name + "\"");
}

SolveOutcome Solve(const Instance& instance, const SolveOptions& options, int d) {
  switch (options.solver) {
    case SolverKind::kExact:
      return BruteForce(instance, options.budget);
    case SolverKind::kGreedy: {
      SolveOutcome out;
      out.committee = Greedy(instance);
      return out;
    }
    case SolverKind::kFptas:
      if (!options.epsilon) {
        throw Error(ErrorCode::kInvalidArgument, "fptas needs --epsilon");
      }
      return Fptas(instance, *options.epsilon, d, options.overrides, options.budget);
    case SolverKind::kAdditive:
      return Additive(instance, d, options.budget);
    case SolverKind::kColorCoding:
      return ColorCoding(instance, options.seed, options.reps, options.budget);
    case SolverKind::kPav:
      return PavDispatch(instance, options.seed, options.reps, options.budget);
    case SolverKind::kDelta:
      return DecideByDelta(instance, options.budget);
  }
  throw Error(ErrorCode::kInternal, "unhandled solver");
}

}  // namespace thiele
