// Copyright 2026 The Authors.
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

#ifndef DECOY_ERRORS_H_
#define DECOY_ERRORS_H_

#include <stdexcept>
#include <string>

namespace decoy {

enum class ErrorCode {
  kUnknownState,
  kUnknownAction,
  kMissingChoice,
  kTooLarge,
  kTooManyCombinations,
  kTrapFakeOverlap,
  kPlacementOverlapsFinals,
  kDecoysOutsideWin2,
  kIncompatibleComposition,
  kInvalidConfig,
  kInvalidParams,
  kParseError,
  kSchemaError,
  kValidationError,
  kIoError,
};

const char* ErrorCodeName(ErrorCode code);

// Every failure raised by the library carries one of the codes above.
class DecoyError : public std::runtime_error {
 public:
  DecoyError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

  // True for the resource guards (oracle and enumeration bounds).
  bool IsResourceGuard() const {
    return code_ == ErrorCode::kTooLarge ||
           code_ == ErrorCode::kTooManyCombinations;
  }

 private:
  ErrorCode code_;
};

}  // namespace decoy

#endif  // DECOY_ERRORS_H_
