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

#ifndef THIELE_ERROR_HPP_
#define THIELE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace thiele {

enum class ErrorCode {
  kInvalidInput,     // malformed or inconsistent instance data
  kInvalidArgument,  // bad parameter to an operation (eps range, c in S, ...)
  kBudgetExceeded,   // an exponential search hit its configured limit
  kInternal,         // a checked structural promise failed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace thiele

#endif  // THIELE_ERROR_HPP_
