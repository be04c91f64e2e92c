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


#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "thiele/thiele.h"

namespace {

constexpr int kExitCommittee = 0;
constexpr int kExitNoInstance = 1;
constexpr int kExitError = 2;

int Report(thiele_status status, char* text) {
  if (text) {
    std::fputs(text, stdout);
    thiele_string_free(text);
  }
  if (status == THIELE_OK) return kExitCommittee;
  if (status == THIELE_NO_INSTANCE) return kExitNoInstance;
  std::fprintf(stderr, "thiele: %s\n", thiele_last_error());
  return kExitError;
}

thiele_instance* Load(const std::string& path) {
  thiele_instance* inst = nullptr;
  if (thiele_instance_load(path.c_str(), &inst) != THIELE_OK) {
    std::fprintf(stderr, "thiele: %s\n", thiele_last_error());
    return nullptr;
  }
  return inst;
}

const char* OrNull(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

struct SolveArgs {
  std::string input;
  std::string solver = "exact";
  std::string epsilon;
  std::string t;
  uint64_t seed = 0;
  int64_t reps = 0;
  std::string override_W;
  int64_t override_w = 0;
  int64_t override_r = 0;
  int64_t max_subsets = 0;
  std::string output;
};

void FillOptions(const SolveArgs& a, thiele_solve_options& o) {
  thiele_solve_options_init(&o);
  o.solver = a.solver.c_str();
  o.epsilon = OrNull(a.epsilon);
  o.t = OrNull(a.t);
  o.seed = a.seed;
  o.reps = a.reps;
  o.override_W = OrNull(a.override_W);
  o.override_w = a.override_w;
  o.override_r = a.override_r;
  if (a.max_subsets > 0) o.max_subsets = a.max_subsets;
}

void AddOverrides(CLI::App* cmd, SolveArgs& a) {
  cmd->add_option("--override-W", a.override_W, "degree bound W for the sunflower rule");
  cmd->add_option("--override-w", a.override_w, "sunflower size w")->check(CLI::PositiveNumber);
  cmd->add_option("--override-r", a.override_r, "number of top candidates kept")
      ->check(CLI::PositiveNumber);
}

int RunSolve(const SolveArgs& a) {
  thiele_instance* inst = Load(a.input);
  if (!inst) return kExitError;
  thiele_solve_options o;
  FillOptions(a, o);
  char* report = nullptr;
  const thiele_status status = thiele_solve(inst, &o, &report);
  thiele_instance_free(inst);
  return Report(status, report);
}

int RunKernelize(const SolveArgs& a) {
  thiele_instance* inst = Load(a.input);
  if (!inst) return kExitError;
  thiele_solve_options o;
  FillOptions(a, o);
  thiele_instance* kernel = nullptr;
  char* report = nullptr;
  thiele_status status = thiele_kernelize(inst, &o, &kernel, &report);
  thiele_instance_free(inst);
  if (status == THIELE_OK) {
    char* doc = nullptr;
    status = thiele_instance_to_json(kernel, &doc);
    if (status == THIELE_OK) {
      std::ofstream out(a.output);
      out << doc;
      thiele_string_free(doc);
      if (!out) {
        thiele_instance_free(kernel);
        thiele_string_free(report);
        std::fprintf(stderr, "thiele: cannot write \"%s\"\n", a.output.c_str());
        return kExitError;
      }
    }
  }
  thiele_instance_free(kernel);
  return Report(status, report);
}

int RunAnalyze(const std::string& input) {
  thiele_instance* inst = Load(input);
  if (!inst) return kExitError;
  char* report = nullptr;
  const thiele_status status = thiele_analyze(inst, &report);
  thiele_instance_free(inst);
  return Report(status, report);
}

struct GenArgs {
  int candidates = 10;
  int voters = 20;
  int max_d = 2;
  int max_degree = 3;
  int duplicates = 0;
  std::string rule = "pav";
  int k = 2;
  std::string t;
  uint64_t seed = 1;
  std::string output;
};

int RunGen(const GenArgs& a) {
  thiele_gen_options o;
  thiele_gen_options_init(&o);
  o.candidates = a.candidates;
  o.voters = a.voters;
  o.max_d = a.max_d;
  o.max_voter_degree = a.max_degree;
  o.duplicates = a.duplicates;
  o.rule = a.rule.c_str();
  o.k = a.k;
  o.t = OrNull(a.t);
  o.seed = a.seed;
  thiele_instance* inst = nullptr;
  thiele_status status = thiele_generate(&o, &inst);
  char* doc = nullptr;
  if (status == THIELE_OK) status = thiele_instance_to_json(inst, &doc);
  thiele_instance_free(inst);
  if (status == THIELE_OK && !a.output.empty()) {
    std::ofstream out(a.output);
    out << doc;
    thiele_string_free(doc);
    if (!out) {
      std::fprintf(stderr, "thiele: cannot write \"%s\"\n", a.output.c_str());
      return kExitError;
    }
    return kExitCommittee;
  }
  return Report(status, doc);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Committee selection under Thiele rules"};
  app.require_subcommand(1);

  SolveArgs solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "select a committee");
  solve_cmd->add_option("--input", solve.input, "instance document")->required();
  solve_cmd->add_option("--solver", solve.solver, "solver to run")
      ->check(CLI::IsMember(
          {"exact", "greedy", "fptas", "additive", "colorcoding", "pav", "delta"}));
  solve_cmd->add_option("--epsilon", solve.epsilon, "approximation parameter p/q");
  solve_cmd->add_option("--t", solve.t, "threshold p/q, replaces the document's");
  solve_cmd->add_option("--seed", solve.seed, "coloring seed");
  solve_cmd->add_option("--reps", solve.reps, "repetitions per t'")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--max-subsets", solve.max_subsets, "exhaustive search budget")
      ->check(CLI::PositiveNumber);
  AddOverrides(solve_cmd, solve);

  SolveArgs kern;
  CLI::App* kern_cmd = app.add_subcommand("kernelize", "shrink an instance");
  kern_cmd->add_option("--input", kern.input, "instance document")->required();
  kern_cmd->add_option("--epsilon", kern.epsilon, "loss parameter p/q")->required();
  kern_cmd->add_option("--output", kern.output, "kernel document")->required();
  AddOverrides(kern_cmd, kern);

  std::string analyze_input;
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "structural parameters");
  analyze_cmd->add_option("--input", analyze_input, "instance document")->required();

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate a K_{d,d}-free instance");
  gen_cmd->add_option("--candidates", gen.candidates)->required();
  gen_cmd->add_option("--voters", gen.voters)->required();
  gen_cmd->add_option("--max-d", gen.max_d)->required();
  gen_cmd->add_option("--seed", gen.seed)->required();
  gen_cmd->add_option("--duplicates", gen.duplicates, "one group of identical voters");
  gen_cmd->add_option("--max-degree", gen.max_degree, "approvals per voter");
  gen_cmd->add_option("--rule", gen.rule)
      ->check(CLI::IsMember({"pav", "cc", "av", "random-owa"}));
  gen_cmd->add_option("--k", gen.k);
  gen_cmd->add_option("--t", gen.t);
  gen_cmd->add_option("--output", gen.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  if (*solve_cmd) return RunSolve(solve);
  if (*kern_cmd) return RunKernelize(kern);
  if (*analyze_cmd) return RunAnalyze(analyze_input);
  return RunGen(gen);
}
