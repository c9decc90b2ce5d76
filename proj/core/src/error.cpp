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

#include "ontovsm/error.hpp"

namespace ontovsm {

std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kDuplicateClass: return "duplicate_class";
    case ErrorCode::kUndeclaredParent: return "undeclared_parent";
    case ErrorCode::kCycle: return "cycle";
    case ErrorCode::kUnknownClass: return "unknown_class";
    case ErrorCode::kDuplicateEntity: return "duplicate_entity";
    case ErrorCode::kInvalidEntity: return "invalid_entity";
    case ErrorCode::kUnknownEntity: return "unknown_entity";
    case ErrorCode::kInvalidAnnotation: return "invalid_annotation";
    case ErrorCode::kSpanOutOfBounds: return "span_out_of_bounds";
    case ErrorCode::kOverlappingSpans: return "overlapping_spans";
    case ErrorCode::kClassMismatch: return "class_mismatch";
    case ErrorCode::kNameMismatch: return "name_mismatch";
    case ErrorCode::kDuplicateDocument: return "duplicate_doc";
    case ErrorCode::kUnknownDocument: return "unknown_doc";
    case ErrorCode::kEmptyCorpus: return "empty_corpus";
    case ErrorCode::kEmptyQuery: return "empty_query";
    case ErrorCode::kInvalidConfig: return "invalid_config";
    case ErrorCode::kUnknownModel: return "unknown_model";
    case ErrorCode::kMissingQrels: return "missing_qrels";
    case ErrorCode::kInvalidArgument: return "invalid_argument";
  }
  return "unknown";
}

}  // namespace ontovsm
