// Copyright 2026 The ncg Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ncg {

enum class ErrorCode {
  kInvalidArgument,
  kInvalidNetwork,
  kInvalidStrategy,
  kParseError,
  kSpaceTooLarge,
  kNotSupported,
  kInfiniteRatio,
  kPreconditionNotMet,
  kConstructionSearchFailed,
  kScriptExhausted,
  kOddDepth,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kInvalidNetwork: return "INVALID_NETWORK";
    case ErrorCode::kInvalidStrategy: return "INVALID_STRATEGY";
    case ErrorCode::kParseError: return "PARSE_ERROR";
    case ErrorCode::kSpaceTooLarge: return "SPACE_TOO_LARGE";
    case ErrorCode::kNotSupported: return "NOT_SUPPORTED";
    case ErrorCode::kInfiniteRatio: return "INFINITE_RATIO";
    case ErrorCode::kPreconditionNotMet: return "PRECONDITION_NOT_MET";
    case ErrorCode::kConstructionSearchFailed: return "CONSTRUCTION_SEARCH_FAILED";
    case ErrorCode::kScriptExhausted: return "SCRIPT_EXHAUSTED";
    case ErrorCode::kOddDepth: return "ODD_DEPTH";
  }
  return "UNKNOWN";
}

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ncg
