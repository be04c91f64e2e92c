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


#ifndef THIELE_TESTS_UNIT_HELPERS_HPP_
#define THIELE_TESTS_UNIT_HELPERS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "thiele/instance.hpp"
#include "thiele/instance_io.hpp"
#include "thiele/owa.hpp"

namespace thiele::test {

inline Rational Q(const char* text) { return ParseRational(text); }

inline std::vector<Rational> Qs(std::initializer_list<const char*> items) {
  std::vector<Rational> out;
  for (const char* s : items) out.push_back(ParseRational(s));
  return out;
}

// a, b, c; v1 {a,b}, v2 {b,c}, v3 {c}; PAV.
inline Instance E1(int k = 2, std::optional<std::string> t = std::nullopt) {
  std::string doc =
      R"({"format": 1, "candidates": ["a", "b", "c"],
          "voters": [{"id": "v1", "approvals": ["a", "b"]},
                     {"id": "v2", "approvals": ["b", "c"]},
                     {"id": "v3", "approvals": ["c"]}],
          "rule": {"type": "pav"}, "k": )" +
      std::to_string(k);
  if (t) doc += R"(, "t": ")" + *t + "\"";
  return ParseInstance(doc + "}");
}

// Candidates c0..c{m-1}, voters v0.., one OWA vector per voter.
inline Instance Build(int m, const std::vector<CandidateSet>& approvals,
                      const std::vector<OwaVector>& vectors, int k,
                      std::optional<Rational> t = std::nullopt) {
  std::vector<std::string> cids, vids;
  for (int c = 0; c < m; ++c) cids.push_back("c" + std::to_string(c));
  for (std::size_t v = 0; v < approvals.size(); ++v) vids.push_back("v" + std::to_string(v));
  return MakeInstance(ProfileGraph(cids, vids, approvals), OwaFamily(vectors), k, t);
}

// Same, every voter on PAV cut to its approval count.
inline Instance BuildPav(int m, const std::vector<CandidateSet>& approvals, int k,
                         std::optional<Rational> t = std::nullopt) {
  std::vector<OwaVector> vectors;
  for (const CandidateSet& a : approvals) vectors.push_back(OwaVector::Pav(a.size()));
  return Build(m, approvals, vectors, k, t);
}

inline CandidateSet Ids(const Instance& inst, std::initializer_list<const char*> names) {
  CandidateSet out;
  for (const char* n : names) out.push_back(*inst.graph.FindCandidate(n));
  return out;
}

inline std::vector<std::string> Names(const Instance& inst, const CandidateSet& s) {
  return CandidateNames(inst.graph, s);
}

}  // namespace thiele::test

#endif  // THIELE_TESTS_UNIT_HELPERS_HPP_
