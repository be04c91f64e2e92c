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

#include "thiele/owa.hpp"

#include <algorithm>

#include "thiele/error.hpp"

namespace thiele {

OwaVector::OwaVector(std::vector<Rational> weights) : weights_(std::move(weights)) {
  for (const Rational& w : weights_) {
    if (w < 0) {
      throw Error(ErrorCode::kInvalidInput, "OWA weight must be non-negative");
    }
  }
  if (!IsNonIncreasing(weights_)) {
    throw Error(ErrorCode::kInvalidInput,
                "OWA vector must be non-increasing (an increasing vector does "
                "not give a submodular satisfaction function)");
  }
}

OwaVector OwaVector::Pav(std::size_t length) {
  std::vector<Rational> w;
  w.reserve(length);
  for (std::size_t j = 1; j <= length; ++j) w.emplace_back(1, j);
  return OwaVector(std::move(w));
}

OwaVector OwaVector::ChamberlinCourant(std::size_t length) {
  std::vector<Rational> w(length, Rational(0));
  if (length > 0) w[0] = 1;
  return OwaVector(std::move(w));
}

OwaVector OwaVector::Approval(std::size_t length) {
  return OwaVector(std::vector<Rational>(length, Rational(1)));
}

const Rational& OwaVector::weight(std::size_t j) const {
  static const Rational kZero(0);
  if (j == 0 || j > weights_.size()) return kZero;
  return weights_[j - 1];
}

Rational OwaVector::PrefixSum(std::size_t count) const {
  Rational sum(0);
  const std::size_t n = std::min(count, weights_.size());
  for (std::size_t i = 0; i < n; ++i) sum += weights_[i];
  return sum;
}

bool OwaVector::IsAllZero() const {
  return std::all_of(weights_.begin(), weights_.end(),
                     [](const Rational& w) { return w == 0; });
}

OwaVector OwaVector::WithoutPrefix(std::size_t count) const {
  OwaVector out;
  if (count < weights_.size()) {
    out.weights_.assign(weights_.begin() + static_cast<std::ptrdiff_t>(count),
                        weights_.end());
  }
  return out;
}

OwaVector OwaVector::Truncated(std::size_t length) const {
  OwaVector out;
  out.weights_.assign(weights_.begin(),
                      weights_.begin() + static_cast<std::ptrdiff_t>(
                                             std::min(length, weights_.size())));
  return out;
}

OwaVector OwaVector::Scaled(const Rational& divisor) const {
  OwaVector out;
  out.weights_.reserve(weights_.size());
  for (const Rational& w : weights_) out.weights_.push_back(w / divisor);
  return out;
}

bool OwaVector::AgreesWith(const OwaVector& other, std::size_t length) const {
  for (std::size_t j = 1; j <= length; ++j) {
    if (weight(j) != other.weight(j)) return false;
  }
  return true;
}

std::vector<Rational> ThieleDifferences(const ThieleFunction& f) {
  std::vector<Rational> diffs;
  for (std::size_t i = 1; i < f.values.size(); ++i) {
    diffs.push_back(f.values[i] - f.values[i - 1]);
  }
  return diffs;
}

OwaVector OwaFromThiele(const ThieleFunction& f) {
  if (f.values.size() < 2) {
    throw Error(ErrorCode::kInvalidInput, "Thiele function needs f(0) and f(1)");
  }
  if (f.values.front() != 0) {
    throw Error(ErrorCode::kInvalidInput, "Thiele function must have f(0) = 0");
  }
  return OwaVector(ThieleDifferences(f));
}

bool IsNonIncreasing(std::span<const Rational> weights) {
  for (std::size_t i = 1; i < weights.size(); ++i) {
    if (weights[i] > weights[i - 1]) return false;
  }
  return true;
}

bool IsMonotoneSubmodular(const ThieleFunction& f) {
  const auto& v = f.values;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] < v[i - 1]) return false;
  }
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    if (v[i + 1] - v[i] > v[i] - v[i - 1]) return false;
  }
  return true;
}

ThieleFunction PavFunction(std::size_t length) {
  ThieleFunction f;
  f.values.emplace_back(0);
  for (std::size_t i = 1; i < length; ++i) {
    f.values.push_back(f.values.back() + Rational(1, i));
  }
  return f;
}

Rational OwaFamily::LambdaMin() const {
  if (vectors_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "lambda_min of an empty family");
  }
  Rational best = vectors_.front().weight(1);
  for (const OwaVector& v : vectors_) best = std::min(best, v.weight(1));
  return best;
}

Rational OwaFamily::LambdaMax() const {
  if (vectors_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "lambda_max of an empty family");
  }
  Rational best = vectors_.front().weight(1);
  for (const OwaVector& v : vectors_) best = std::max(best, v.weight(1));
  return best;
}

NormalizedFamily Normalize(const OwaFamily& family,
                           const std::optional<Rational>& threshold) {
  if (family.empty()) return {family, threshold, Rational(1)};
  const Rational lambda_max = family.LambdaMax();
  if (lambda_max <= 0) {
    throw Error(ErrorCode::kInvalidInput,
                "every OWA vector is zero; the instance has no score");
  }
  if (lambda_max == 1) return {family, threshold, Rational(1)};
  std::vector<OwaVector> scaled;
  scaled.reserve(family.size());
  for (const OwaVector& v : family.vectors()) scaled.push_back(v.Scaled(lambda_max));
  std::optional<Rational> t;
  if (threshold) t = *threshold / lambda_max;
  return {OwaFamily(std::move(scaled)), t, lambda_max};
}

}  // namespace thiele
