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

#ifndef THIELE_OWA_HPP_
#define THIELE_OWA_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "thiele/rational.hpp"

namespace thiele {

// A voter's ordered weights: the j-th approved committee member earns the
// voter weight(j). Non-increasing and non-negative by construction. Entries
// past the stored length read as zero.
class OwaVector {
 public:
  OwaVector() = default;

  // Throws Error(kInvalidInput) when `weights` increases anywhere or has a
  // negative entry; an increasing vector gives a satisfaction function that
  // is not submodular.
  explicit OwaVector(std::vector<Rational> weights);

  static OwaVector Pav(std::size_t length);
  static OwaVector ChamberlinCourant(std::size_t length);
  static OwaVector Approval(std::size_t length);

  std::size_t size() const { return weights_.size(); }
  bool empty() const { return weights_.empty(); }
  const std::vector<Rational>& weights() const { return weights_; }

  // 1-based. Zero past the end.
  const Rational& weight(std::size_t j) const;
  // weight(1) + ... + weight(count).
  Rational PrefixSum(std::size_t count) const;

  bool IsAllZero() const;

  // Drops the first `count` entries.
  OwaVector WithoutPrefix(std::size_t count) const;
  OwaVector Truncated(std::size_t length) const;
  OwaVector Scaled(const Rational& divisor) const;

  // Equality up to implicit zero padding, over the first `length` slots.
  bool AgreesWith(const OwaVector& other, std::size_t length) const;

  friend bool operator==(const OwaVector&, const OwaVector&) = default;

 private:
  std::vector<Rational> weights_;
};

// f(0), f(1), ..., f(L) with f(0) = 0.
struct ThieleFunction {
  std::vector<Rational> values;
};

// Raw f(i) - f(i-1) sequence, unvalidated.
std::vector<Rational> ThieleDifferences(const ThieleFunction& f);

// Throws Error(kInvalidInput) if f(0) != 0, the function has fewer than two
// values, or the differences are not a valid OwaVector.
OwaVector OwaFromThiele(const ThieleFunction& f);

bool IsNonIncreasing(std::span<const Rational> weights);

// Monotone and diminishing returns, checked on the values directly.
bool IsMonotoneSubmodular(const ThieleFunction& f);

ThieleFunction PavFunction(std::size_t length);

// One OwaVector per voter, aligned with ProfileGraph voter indices.
class OwaFamily {
 public:
  OwaFamily() = default;
  explicit OwaFamily(std::vector<OwaVector> vectors)
      : vectors_(std::move(vectors)) {}

  std::size_t size() const { return vectors_.size(); }
  bool empty() const { return vectors_.empty(); }
  const OwaVector& operator[](std::size_t voter) const { return vectors_[voter]; }
  const std::vector<OwaVector>& vectors() const { return vectors_; }

  // Minimum / maximum first weight over voters. Throws on an empty family.
  Rational LambdaMin() const;
  Rational LambdaMax() const;

  friend bool operator==(const OwaFamily&, const OwaFamily&) = default;

 private:
  std::vector<OwaVector> vectors_;
};

struct NormalizedFamily {
  OwaFamily family;
  std::optional<Rational> threshold;
  // The divisor that was applied (lambda_max before normalization).
  Rational divisor;
};

// Divides every weight and the threshold by lambda_max. An empty family is
// returned unchanged with divisor 1; a family whose weights are all zero is
// rejected.
NormalizedFamily Normalize(const OwaFamily& family,
                           const std::optional<Rational>& threshold);

}  // namespace thiele

#endif  // THIELE_OWA_HPP_
