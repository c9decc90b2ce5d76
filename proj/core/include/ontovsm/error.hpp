// Copyright 2026 The ontovsm Authors.
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

#ifndef ONTOVSM_ERROR_HPP_
#define ONTOVSM_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace ontovsm {

// Every failure raised by the library carries one of these codes. The CLI
// prints code_name() as a stable, machine-parsable prefix.
enum class ErrorCode {
  kParse,
  kIo,
  kDuplicateClass,
  kUndeclaredParent,
  kCycle,
  kUnknownClass,
  kDuplicateEntity,
  kInvalidEntity,
  kUnknownEntity,
  kInvalidAnnotation,
  kSpanOutOfBounds,
  kOverlappingSpans,
  kClassMismatch,
  kNameMismatch,
  kDuplicateDocument,
  kUnknownDocument,
  kEmptyCorpus,
  kEmptyQuery,
  kInvalidConfig,
  kUnknownModel,
  kMissingQrels,
  kInvalidArgument,
};

std::string_view code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ontovsm

#endif  // ONTOVSM_ERROR_HPP_
