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
#include "thiele/owa.hpp"

using namespace thiele;
using thiele::test::Q;
using thiele::test::Qs;

TEST_SUITE("owa") {
  TEST_CASE("thiele functions convert to their difference vectors") {
    CHECK(OwaFromThiele(PavFunction(4)).weights() == Qs({"1", "1/2", "1/3"}));
    CHECK(OwaFromThiele({Qs({"0", "1", "1", "1"})}).weights() == Qs({"1", "0", "0"}));
    CHECK(OwaFromThiele({Qs({"0", "1", "2", "3"})}).weights() == Qs({"1", "1", "1"}));
    CHECK(OwaVector::Pav(3) == OwaFromThiele(PavFunction(4)));
    CHECK(OwaVector::ChamberlinCourant(3).weights() == Qs({"1", "0", "0"}));
    CHECK(OwaVector::Approval(2).weights() == Qs({"1", "1"}));
  }

  TEST_CASE("bad thiele functions are rejected") {
    CHECK_THROWS_AS(OwaFromThiele({Qs({"1", "2"})}), Error);
    CHECK_THROWS_AS(OwaFromThiele({Qs({"0"})}), Error);
    CHECK_THROWS_AS(OwaFromThiele({Qs({"0", "1", "3"})}), Error);
    CHECK_THROWS_AS(OwaFromThiele({Qs({"0", "1", "0"})}), Error);
  }

  TEST_CASE("non-increasing check") {
    CHECK(IsNonIncreasing(Qs({"1", "1/2", "1/3"})));
    CHECK_FALSE(IsNonIncreasing(Qs({"1/2", "1"})));
    CHECK(IsNonIncreasing(std::vector<Rational>{}));
    CHECK(IsNonIncreasing(Qs({"1", "1", "0"})));
  }

  TEST_CASE("monotone submodular check") {
    CHECK(IsMonotoneSubmodular({Qs({"0", "1", "3/2", "11/6"})}));
    CHECK_FALSE(IsMonotoneSubmodular({Qs({"0", "1", "3"})}));
    CHECK(IsMonotoneSubmodular({Qs({"0", "1", "1", "1"})}));
    CHECK_FALSE(IsMonotoneSubmodular({Qs({"0", "2", "1"})}));
  }

  TEST_CASE("increasing vector message") {
    try {
      OwaVector(Qs({"1/2", "1"}));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("OWA vector must be non-increasing") != std::string::npos);
      CHECK(e.code() == ErrorCode::kInvalidInput);
    }
    CHECK_THROWS_AS(OwaVector(Qs({"1", "-1"})), Error);
  }

  TEST_CASE("normalize divides by lambda_max") {
    {
      const NormalizedFamily n = Normalize(OwaFamily({OwaVector(Qs({"2", "1"}))}), Q("4"));
      CHECK(n.family[0].weights() == Qs({"1", "1/2"}));
      CHECK(*n.threshold == 2);
      CHECK(n.divisor == 2);
    }
    {
      const OwaFamily f({OwaVector::Pav(2), OwaVector::Approval(1)});
      const NormalizedFamily n = Normalize(f, Q("5/2"));
      CHECK(n.family == f);
      CHECK(*n.threshold == Q("5/2"));
    }
    {
      const OwaFamily f({OwaVector(Qs({"3", "1"})), OwaVector(Qs({"1", "1"}))});
      const NormalizedFamily n = Normalize(f, Q("6"));
      CHECK(n.family[0].weights() == Qs({"1", "1/3"}));
      CHECK(n.family[1].weights() == Qs({"1/3", "1/3"}));
      CHECK(*n.threshold == 2);
    }
    CHECK_THROWS_AS(Normalize(OwaFamily({OwaVector(Qs({"0"}))}), std::nullopt), Error);
  }

  TEST_CASE("vector helpers") {
    const OwaVector v = OwaVector::Pav(3);
    CHECK(v.weight(0) == 0);
    CHECK(v.weight(2) == Q("1/2"));
    CHECK(v.weight(7) == 0);
    CHECK(v.PrefixSum(2) == Q("3/2"));
    CHECK(v.PrefixSum(9) == Q("11/6"));
    CHECK(v.WithoutPrefix(1).weights() == Qs({"1/2", "1/3"}));
    CHECK(v.WithoutPrefix(3).empty());
    CHECK(v.Truncated(1).weights() == Qs({"1"}));
    CHECK(OwaVector::ChamberlinCourant(3).WithoutPrefix(1).IsAllZero());
    CHECK(v.AgreesWith(OwaVector::Pav(5), 3));
    CHECK_FALSE(v.AgreesWith(OwaVector::Pav(5), 4));
  }

  TEST_CASE("lambda min and max") {
    const OwaFamily f({OwaVector(Qs({"1/2"})), OwaVector(Qs({"1", "1"}))});
    CHECK(f.LambdaMin() == Q("1/2"));
    CHECK(f.LambdaMax() == 1);
    CHECK_THROWS_AS(OwaFamily().LambdaMin(), Error);
  }
}
