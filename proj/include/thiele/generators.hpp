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


#ifndef THIELE_GENERATORS_HPP_
#define THIELE_GENERATORS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thiele/instance.hpp"
#include "thiele/profile_graph.hpp"
#include "thiele/rational.hpp"

namespace thiele {

enum class RuleKind { kPav, kCc, kAv, kRandomOwa };

const char* RuleKindName(RuleKind kind);
RuleKind ParseRuleKind(const std::string& name);

struct GeneratorSpec {
  int candidates = 10;
  int voters = 20;
  int d = 2;                 // the output has no K_{d,d}
  int max_voter_degree = 3;
  // One group of identical voters per entry, each approving at most d - 1
  // candidates, on top of `voters` voters with distinct approval sets.
  std::vector<int> duplicate_groups;
  RuleKind rule = RuleKind::kPav;
  int k = 2;
  std::optional<Rational> threshold;
  uint64_t seed = 1;
  int max_attempts = 200;
};

// Deterministic in `spec`. Throws Error(kBudgetExceeded) when the voters
// cannot be placed within max_attempts tries each.
Instance GenKddFree(const GeneratorSpec& spec);

struct SunflowerSpec {
  int w = 5;          // planted members
  int core_size = 1;  // voters approving every member
  int max_petal = 2;  // private voters per member, at least 1
  int noise = 3;      // extra candidates outside the sunflower
  RuleKind rule = RuleKind::kPav;
  int k = 2;
  uint64_t seed = 1;
};

struct SunflowerFixture {
  Instance instance;
  CandidateSet members;
  VoterSet core;
};

SunflowerFixture GenSunflowerFixture(const SunflowerSpec& spec);

}  // namespace thiele

#endif  // THIELE_GENERATORS_HPP_
