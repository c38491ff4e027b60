// Copyright 2026 The matchembed Authors
//
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

#ifndef MATCHEMBED_ERROR_HPP_
#define MATCHEMBED_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace matchembed {

// Mirrors me_status in the C header; the numeric values are part of the ABI.
enum class ErrorCode {
  kInvalidArgument = 1,
  kOutOfRange = 2,
  kIo = 3,
  kParse = 4,
  kTooLarge = 5,
  kDivergence = 6,
  kRuntime = 7,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void Fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void Require(bool condition, const std::string& what,
                    ErrorCode code = ErrorCode::kInvalidArgument) {
  if (!condition) Fail(code, what);
}

}  // namespace matchembed

#endif  // MATCHEMBED_ERROR_HPP_
