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

#ifndef DIRRICCI_CORE_ERROR_HPP
#define DIRRICCI_CORE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dirricci {

enum class ErrorCode {
  // graph construction
  kLoopEdge,
  kDuplicateEdge,
  kVertexOutOfRange,
  kAntiParallelPair,
  // measures
  kAlphaOutOfRange,
  kDegreeConventionViolated,
  // transport
  kMassMismatch,
  kInfiniteRequiredDistance,
  kLipschitzViolation,
  kSupportTooLarge,
  // curvature
  kSameVertex,
  kInfiniteDistance,
  kNotStronglyConnected,
  kLadderNotStabilized,
  // generators
  kNTooSmall,
  kCyclicParentMap,
  kEmptyOffsets,
  kAntiParallelOffsets,
  // i/o and misc
  kParseError,
  kInvalidArgument,
  kIoError,
};

const char* error_code_name(ErrorCode code);

// True for errors that mean "the requested quantity is undefined on this
// input" (infinite distance, whole-graph command on a non-strongly-connected
// graph) as opposed to malformed input.
bool is_undefined_computation(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dirricci

#endif  // DIRRICCI_CORE_ERROR_HPP
