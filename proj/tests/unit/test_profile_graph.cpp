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


#include <doctest.h>

#include "helpers.hpp"
#include "thiele/error.hpp"
#include "thiele/profile_graph.hpp"

using namespace thiele;
using namespace thiele::test;

namespace {

ProfileGraph Graph(int m, const std::vector<CandidateSet>& approvals) {
  std::vector<std::string> cids, vids;
  for (int c = 0; c < m; ++c) cids.push_back("c" + std::to_string(c));
  for (std::size_t v = 0; v < approvals.size(); ++v) vids.push_back("v" + std::to_string(v));
  return ProfileGraph(cids, vids, approvals);
}

ProfileGraph Complete(int m, int n) {
  CandidateSet all;
  for (int c = 0; c < m; ++c) all.push_back(c);
  return Graph(m, std::vector<CandidateSet>(n, all));
}

}  // namespace

TEST_SUITE("profile_graph") {
  TEST_CASE("construction checks") {
    CHECK_THROWS_AS(ProfileGraph({"a", "a"}, {"v"}, {{0}}), Error);
    CHECK_THROWS_AS(ProfileGraph({"a"}, {"v", "v"}, {{0}, {0}}), Error);
    CHECK_THROWS_AS(ProfileGraph({"a"}, {"v"}, {{0, 0}}), Error);
    CHECK_THROWS_AS(ProfileGraph({"a"}, {"v"}, {{1}}), Error);
    const ProfileGraph g = Graph(3, {{2, 0}});
    CHECK(g.approvals(0) == CandidateSet{0, 2});
    CHECK(g.approvers(2) == VoterSet{0});
    CHECK(g.Approves(0, 2));
    CHECK_FALSE(g.Approves(0, 1));
    CHECK(*g.FindCandidate("c1") == 1);
    CHECK_FALSE(g.FindCandidate("zz").has_value());
  }

  TEST_CASE("biclique detection") {
    CHECK(ContainsBiclique(Complete(3, 3), 3, 3));
    CHECK_FALSE(ContainsBiclique(E1().graph, 2, 2));
    CHECK(ContainsBiclique(E1().graph, 1, 1));
    CHECK_FALSE(ContainsBiclique(Graph(2, {{}, {}}), 1, 1));
    CHECK(ContainsBiclique(E1().graph, 1, 2));
    CHECK(ContainsBiclique(E1().graph, 2, 1));
  }

  TEST_CASE("kdd parameter") {
    CHECK(KddParameter(Complete(3, 3)).d == 4);
    CHECK(KddParameter(E1().graph).d == 2);
    CHECK(KddParameter(Graph(3, {{0}, {1}, {2}})).d == 2);
    const KddResult capped = KddParameter(Complete(3, 3), 2);
    CHECK(capped.d == 3);
    CHECK_FALSE(capped.determined);
  }

  TEST_CASE("degree stats") {
    const DegreeStats e1 = ComputeDegreeStats(E1().graph);
    CHECK(e1.delta_c == 2);
    CHECK(e1.delta_v == 2);
    CHECK(e1.d == 2);
    const DegreeStats empty = ComputeDegreeStats(Graph(2, {}));
    CHECK(empty.delta_c == 0);
    CHECK(empty.delta_v == 0);
    CHECK(empty.d == 1);
    const DegreeStats edge = ComputeDegreeStats(Graph(1, {{0}}));
    CHECK(edge.delta_c == 1);
    CHECK(edge.delta_v == 1);
    CHECK(edge.d == 2);
    const DegreeStats capped = ComputeDegreeStats(Complete(3, 3), 2);
    CHECK(capped.EffectiveD() == 4);
  }

  TEST_CASE("sunflower with empty core") {
    const ProfileGraph g = Graph(4, {{0}, {1}, {2}, {3}});
    const auto s = FindSunflower(g, 1, 4);
    REQUIRE(s.has_value());
    CHECK(s->members.size() == 4);
    CHECK(s->core.empty());
    CHECK(IsSunflower(g, *s));
  }

  TEST_CASE("sunflower with a shared voter") {
    // Voter 0 approves all five, voters 1..5 one each.
    const ProfileGraph g = Graph(5, {{0, 1, 2, 3, 4}, {0}, {1}, {2}, {3}, {4}});
    const auto s = FindSunflower(g, 2, 5);
    REQUIRE(s.has_value());
    CHECK(s->members == CandidateSet{0, 1, 2, 3, 4});
    CHECK(s->core == VoterSet{0});
    CHECK(IsSunflower(g, *s));
  }

  TEST_CASE("no sunflower when intersections differ") {
    // N(x) = {0,1,2}, N(y) = {0,1,3}, N(z) = {0,4}.
    const ProfileGraph g = Graph(3, {{0, 1, 2}, {0, 1}, {0}, {1}, {2}});
    CHECK_FALSE(FindSunflower(g, 3, 3).has_value());
    // Brute force over the only 3-subset with every possible core.
    for (unsigned mask = 0; mask < (1u << g.num_voters()); ++mask) {
      VoterSet core;
      for (int v = 0; v < g.num_voters(); ++v) {
        if (mask >> v & 1) core.push_back(v);
      }
      CHECK_FALSE(IsSunflower(g, {{0, 1, 2}, core}));
    }
    CHECK(FindSunflower(g, 3, 2).has_value());
  }

  TEST_CASE("sunflower search respects the degree cap and size") {
    const ProfileGraph g = Graph(3, {{0}, {1}, {2}, {2}});
    CHECK_FALSE(FindSunflower(g, 1, 3).has_value());
    CHECK(FindSunflower(g, 2, 3).has_value());
    CHECK_FALSE(FindSunflower(g, 5, 4).has_value());
  }

  TEST_CASE("high degree set") {
    // c0 has 2 of the 4 voters, c1 has degree 1.
    const ProfileGraph g = Graph(2, {{0}, {0}, {1}, {}});
    const VoterSet all{0, 1, 2, 3};
    CHECK(HighDegreeSet(g, all, Rational(2), 2) == CandidateSet{0});
    CHECK(HighDegreeSet(g, all, Rational(100), 2) == CandidateSet{0});
    CHECK(HighDegreeSet(g, all, Rational(1), 2).empty());
    CHECK(HighDegreeSet(g, all, Rational(4), 1) == CandidateSet{0, 1});
  }

  TEST_CASE("candidate and voter selection") {
    const ProfileGraph g = E1().graph;
    const ProfileGraph no_b = g.KeepCandidates({true, false, true});
    CHECK(no_b.candidate_ids() == std::vector<std::string>{"a", "c"});
    CHECK(no_b.approvals(0) == CandidateSet{0});
    CHECK(no_b.approvals(1) == CandidateSet{1});
    const std::vector<VoterIndex> pick{2, 0};
    const ProfileGraph sel = g.SelectVoters(pick);
    CHECK(sel.voter_ids() == std::vector<std::string>{"v3", "v1"});
  }
}
