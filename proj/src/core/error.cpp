// Copyright 2026 The dirricci Authors
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

#include "core/error.hpp"

namespace dirricci {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLoopEdge: return "LoopEdge";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kAntiParallelPair: return "AntiParallelPair";
    case ErrorCode::kAlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::kDegreeConventionViolated:
      return "DegreeConventionViolated";
    case ErrorCode::kMassMismatch: return "MassMismatch";
    case ErrorCode::kInfiniteRequiredDistance:
      return "InfiniteRequiredDistance";
    case ErrorCode::kLipschitzViolation: return "LipschitzViolation";
    case ErrorCode::kSupportTooLarge: return "SupportTooLarge";
    case ErrorCode::kSameVertex: return "SameVertex";
    case ErrorCode::kInfiniteDistance: return "InfiniteDistance";
    case ErrorCode::kNotStronglyConnected: return "NotStronglyConnected";
    case ErrorCode::kLadderNotStabilized: return "LadderNotStabilized";
    case ErrorCode::kNTooSmall: return "NTooSmall";
    case ErrorCode::kCyclicParentMap: return "CyclicParentMap";
    case ErrorCode::kEmptyOffsets: return "EmptyOffsets";
    case ErrorCode::kAntiParallelOffsets: return "AntiParallelOffsets";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIoError: return "IoError";
  }
  return "UnknownError";
}

bool is_undefined_computation(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInfiniteDistance:
    case ErrorCode::kInfiniteRequiredDistance:
    case ErrorCode::kNotStronglyConnected:
      return true;
    default:
      return false;
  }
}

}  // namespace dirricci
