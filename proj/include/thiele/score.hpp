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

#ifndef THIELE_SCORE_HPP_
#define THIELE_SCORE_HPP_

#include <span>
#include <vector>

#include "thiele/owa.hpp"
#include "thiele/profile_graph.hpp"
#include "thiele/rational.hpp"

namespace thiele {

// sco(S) = sum over voters v of weight_v(1) + ... + weight_v(|A_v ∩ S|).
// Throws Error(kInvalidArgument) on an out-of-range or repeated candidate.
Rational Score(const ProfileGraph& g, const OwaFamily& family,
               std::span<const CandidateIndex> committee);

struct RestrictedFamily {
  OwaFamily family;
  // Voters whose remaining vector is empty or all zero; they can no longer
  // contribute to any score.
  std::vector<bool> exhausted;
};

// Removes, for each voter v, the first |A_v ∩ S| weights of v's vector.
RestrictedFamily Restrict(const OwaFamily& family, const ProfileGraph& g,
                          std::span<const CandidateIndex> committee);

// sco(S ∪ {c}) - sco(S). Throws Error(kInvalidArgument) if c is in S.
Rational Marginal(const ProfileGraph& g, const OwaFamily& family,
                  std::span<const CandidateIndex> committee, CandidateIndex c);

// sco({c}) for every candidate c.
std::vector<Rational> SingletonScores(const ProfileGraph& g, const OwaFamily& family);

// Incremental evaluator for search loops: keeps per-voter hit counts so that
// adding or removing one candidate costs O(deg(c)).
class ScoreAccumulator {
 public:
  ScoreAccumulator(const ProfileGraph& g, const OwaFamily& family);

  // Returns the gain.
  Rational Add(CandidateIndex c);
  void Remove(CandidateIndex c);
  // Gain Add(c) would produce, without changing state.
  Rational Gain(CandidateIndex c) const;

  const Rational& score() const { return score_; }
  void Reset();

 private:
  const ProfileGraph& graph_;
  const OwaFamily& family_;
  std::vector<int> hits_;
  Rational score_;
};

}  // namespace thiele

#endif  // THIELE_SCORE_HPP_
