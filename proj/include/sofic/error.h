// Copyright 2026 The soficlab Authors
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

#ifndef SOFIC_ERROR_H_
#define SOFIC_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace sofic {

// Structured domain errors. Every error that a caller may want to branch on
// has its own code; the CLI prints the code name in its error documents.
enum class ErrorCode {
  kInvalidArgument,
  kNotAPermutation,
  kInversePairMismatch,
  kNotInverseClosed,
  kInvalidTable,
  kGeneratorSetMismatch,
  kUnknownSymbol,
  kTooLargeForExhaustive,
  kDegenerateVector,
  kLengthMismatch,
  kNotBijective,
  kNonPositiveCheeger,
  kStructureViolation,
  kClosureFailure,
  kHypothesisViolation,
  kDefectTooLarge,
  kCollisionFailure,
  kMultiplicativityFailure,
  kParseError,
  kIoError,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sofic

#endif  // SOFIC_ERROR_H_
