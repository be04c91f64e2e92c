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


#include "thiele/thiele.h"

#include <chrono>
#include <cstring>
#include <new>
#include <string>

#include "thiele/error.hpp"
#include "thiele/generators.hpp"
#include "thiele/instance_io.hpp"
#include "thiele/reductions.hpp"
#include "thiele/solvers.hpp"

struct thiele_instance {
  thiele::Instance value;
};

namespace {

thread_local std::string last_error;

thiele_status StatusOf(thiele::ErrorCode code) {
  switch (code) {
    case thiele::ErrorCode::kInvalidInput: return THIELE_ERR_INVALID_INPUT;
    case thiele::ErrorCode::kInvalidArgument: return THIELE_ERR_INVALID_ARGUMENT;
    case thiele::ErrorCode::kBudgetExceeded: return THIELE_ERR_BUDGET;
    case thiele::ErrorCode::kInternal: return THIELE_ERR_INTERNAL;
  }
  return THIELE_ERR_INTERNAL;
}

template <typename Fn>
thiele_status Guard(Fn&& fn) {
  last_error.clear();
  try {
    return fn();
  } catch (const thiele::Error& e) {
    last_error = e.what();
    return StatusOf(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return THIELE_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return THIELE_ERR_INTERNAL;
  }
}

char* Dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void Require(const void* p, const char* what) {
  if (!p) {
    throw thiele::Error(thiele::ErrorCode::kInvalidArgument,
                        std::string(what) + " must not be NULL");
  }
}

std::optional<thiele::Rational> OptionalRational(const char* text) {
  if (!text || !*text) return std::nullopt;
  return thiele::ParseRational(text);
}

thiele::Overrides OverridesOf(const thiele_solve_options& o) {
  thiele::Overrides out;
  out.W = OptionalRational(o.override_W);
  if (o.override_w > 0) out.w = o.override_w;
  if (o.override_r > 0) out.r = o.override_r;
  return out;
}

double MillisecondsSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

extern "C" {

const char* thiele_version(void) { return "0.1.0"; }

const char* thiele_last_error(void) { return last_error.c_str(); }

void thiele_string_free(char* s) { std::free(s); }

thiele_status thiele_instance_parse(const char* json, thiele_instance** out) {
  return Guard([&] {
    Require(json, "json");
    Require(out, "out");
    *out = new thiele_instance{thiele::ParseInstance(json)};
    return THIELE_OK;
  });
}

thiele_status thiele_instance_load(const char* path, thiele_instance** out) {
  return Guard([&] {
    Require(path, "path");
    Require(out, "out");
    *out = new thiele_instance{thiele::LoadInstance(path)};
    return THIELE_OK;
  });
}

void thiele_instance_free(thiele_instance* instance) { delete instance; }

thiele_status thiele_instance_to_json(const thiele_instance* instance, char** out) {
  return Guard([&] {
    Require(instance, "instance");
    Require(out, "out");
    *out = Dup(thiele::SerializeInstance(instance->value));
    return THIELE_OK;
  });
}

int thiele_instance_num_candidates(const thiele_instance* instance) {
  return instance ? instance->value.graph.num_candidates() : -1;
}

int thiele_instance_num_voters(const thiele_instance* instance) {
  return instance ? instance->value.graph.num_voters() : -1;
}

int thiele_instance_k(const thiele_instance* instance) {
  return instance ? instance->value.k : -1;
}

thiele_status thiele_analyze(const thiele_instance* instance, char** report) {
  return Guard([&] {
    Require(instance, "instance");
    Require(report, "report");
    const thiele::DegreeStats stats = thiele::ComputeDegreeStats(instance->value.graph);
    *report = Dup(thiele::AnalyzeReport(instance->value, stats));
    return THIELE_OK;
  });
}

void thiele_solve_options_init(thiele_solve_options* options) {
  if (!options) return;
  const thiele::Budget budget;
  *options = thiele_solve_options{};
  options->solver = "exact";
  options->max_subsets = budget.max_subsets;
  options->max_pattern_bits = budget.max_pattern_bits;
  options->max_recursive_calls = budget.max_recursive_calls;
  options->kdd_cap = thiele::kDefaultKddCap;
}

thiele_status thiele_solve(const thiele_instance* instance,
                           const thiele_solve_options* options, char** report) {
  return Guard([&] {
    Require(instance, "instance");
    Require(options, "options");
    Require(report, "report");
    Require(options->solver, "options->solver");
    const auto start = std::chrono::steady_clock::now();

    thiele::SolveOptions opts;
    opts.solver = thiele::ParseSolverKind(options->solver);
    opts.epsilon = OptionalRational(options->epsilon);
    opts.seed = options->seed;
    if (options->reps > 0) opts.reps = options->reps;
    opts.overrides = OverridesOf(*options);
    opts.budget.max_subsets = options->max_subsets;
    opts.budget.max_pattern_bits = options->max_pattern_bits;
    opts.budget.max_recursive_calls = options->max_recursive_calls;

    thiele::Instance inst = instance->value;
    inst.threshold = thiele::InternalThreshold(inst, OptionalRational(options->t));
    const thiele::DegreeStats stats =
        thiele::ComputeDegreeStats(inst.graph, options->kdd_cap);
    const thiele::SolveOutcome outcome = thiele::Solve(inst, opts, stats.EffectiveD());
    *report = Dup(thiele::SolveReport(inst, opts, outcome, stats, MillisecondsSince(start)));
    return outcome.no_instance() ? THIELE_NO_INSTANCE : THIELE_OK;
  });
}

thiele_status thiele_kernelize(const thiele_instance* instance,
                               const thiele_solve_options* options,
                               thiele_instance** kernel, char** report) {
  return Guard([&] {
    Require(instance, "instance");
    Require(options, "options");
    Require(kernel, "kernel");
    Require(report, "report");
    const auto start = std::chrono::steady_clock::now();
    const std::optional<thiele::Rational> eps = OptionalRational(options->epsilon);
    if (!eps) {
      throw thiele::Error(thiele::ErrorCode::kInvalidArgument, "kernelize needs epsilon");
    }
    const thiele::Overrides overrides = OverridesOf(*options);
    const thiele::DegreeStats stats =
        thiele::ComputeDegreeStats(instance->value.graph, options->kdd_cap);
    thiele::KernelResult result =
        thiele::Kernelize(instance->value, *eps, stats.EffectiveD(), overrides);
    *report = Dup(thiele::KernelReport(instance->value, result, overrides, stats,
                                       MillisecondsSince(start)));
    *kernel = new thiele_instance{std::move(result.instance)};
    return THIELE_OK;
  });
}

void thiele_gen_options_init(thiele_gen_options* options) {
  if (!options) return;
  const thiele::GeneratorSpec spec;
  *options = thiele_gen_options{};
  options->candidates = spec.candidates;
  options->voters = spec.voters;
  options->max_d = spec.d;
  options->max_voter_degree = spec.max_voter_degree;
  options->rule = "pav";
  options->k = spec.k;
  options->seed = spec.seed;
}

thiele_status thiele_generate(const thiele_gen_options* options, thiele_instance** out) {
  return Guard([&] {
    Require(options, "options");
    Require(out, "out");
    thiele::GeneratorSpec spec;
    spec.candidates = options->candidates;
    spec.voters = options->voters;
    spec.d = options->max_d;
    spec.max_voter_degree = options->max_voter_degree;
    if (options->duplicates > 0) spec.duplicate_groups.push_back(options->duplicates);
    spec.rule = thiele::ParseRuleKind(options->rule ? options->rule : "pav");
    spec.k = options->k;
    spec.threshold = OptionalRational(options->t);
    spec.seed = options->seed;
    *out = new thiele_instance{thiele::GenKddFree(spec)};
    return THIELE_OK;
  });
}

}  // extern "C"
