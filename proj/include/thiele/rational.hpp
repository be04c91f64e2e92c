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

#ifndef THIELE_RATIONAL_HPP_
#define THIELE_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace thiele {

// Arbitrary-precision rational, always kept in canonical form (reduced,
// positive denominator). Every score in the engine is one of these.
using Rational = mpq_class;
using Integer = mpz_class;

// num/den in canonical form. mpq_class(num, den) alone does not reduce.
inline Rational Ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "p/q", "-p/q" or a plain integer. Throws Error(kInvalidInput) on
// malformed text or a zero denominator.
Rational ParseRational(std::string_view text);

// "7/2", "3", "-1/4".
std::string ToString(const Rational& value);

Integer Floor(const Rational& value);
Integer Ceil(const Rational& value);

Rational Pow(const Rational& base, int exponent);

// Fits-or-throws conversion used where a rational bound has to become a
// loop count or container size.
int64_t ToInt64(const Integer& value);

// Rational bounds on the irrational constants that appear in the
// approximation guarantees. The direction of each bound is chosen so the
// inequality it feeds stays valid.
inline Rational OneMinusInvELowerBound() { return Ratio(632120, 1000000); }
inline Rational EOverEMinusOneUpperBound() { return Ratio(1582, 1000); }

}  // namespace thiele

#endif  // THIELE_RATIONAL_HPP_
