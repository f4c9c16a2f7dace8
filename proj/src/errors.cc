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

#include "decoy/errors.h"

namespace decoy {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownState: return "UnknownState";
    case ErrorCode::kUnknownAction: return "UnknownAction";
    case ErrorCode::kMissingChoice: return "MissingChoice";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kTooManyCombinations: return "TooManyCombinations";
    case ErrorCode::kTrapFakeOverlap: return "TrapFakeOverlap";
    case ErrorCode::kPlacementOverlapsFinals: return "PlacementOverlapsFinals";
    case ErrorCode::kDecoysOutsideWin2: return "DecoysOutsideWin2";
    case ErrorCode::kIncompatibleComposition: return "IncompatibleComposition";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kSchemaError: return "SchemaError";
    case ErrorCode::kValidationError: return "ValidationError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace decoy
