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

#include "thiele/rational.hpp"

#include <cctype>
#include <limits>

#include "thiele/error.hpp"

namespace thiele {
namespace {

bool IsIntegerText(std::string_view text) {
  if (!text.empty() && text.front() == '-') text.remove_prefix(1);
  if (text.empty()) return false;
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!IsIntegerText(num) || !IsIntegerText(den) || den.front() == '-') {
    throw Error(ErrorCode::kInvalidInput,
                "malformed rational \"" + std::string(text) + "\"");
  }
  Integer numerator(std::string(num), 10);
  Integer denominator(std::string(den), 10);
  if (denominator == 0) {
    throw Error(ErrorCode::kInvalidInput,
                "zero denominator in \"" + std::string(text) + "\"");
  }
  Rational value(numerator, denominator);
  value.canonicalize();
  return value;
}

std::string ToString(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Integer Floor(const Rational& value) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

Integer Ceil(const Rational& value) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

Rational Pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative exponent");
  }
  Rational out(1);
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

int64_t ToInt64(const Integer& value) {
  if (value > Integer(std::to_string(std::numeric_limits<int64_t>::max())) ||
      value < Integer(std::to_string(std::numeric_limits<int64_t>::min()))) {
    throw Error(ErrorCode::kBudgetExceeded,
                "integer " + value.get_str() + " does not fit in 64 bits");
  }
  return static_cast<int64_t>(std::stoll(value.get_str()));
}

}  // namespace thiele
