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

#ifndef ONTOVSM_SRC_VALIDATE_HPP_
#define ONTOVSM_SRC_VALIDATE_HPP_

#include <string>
#include <string_view>

#include "ontovsm/error.hpp"

namespace ontovsm::detail {

inline bool has_control_char(std::string_view s) {
  for (unsigned char c : s) {
    if (c < 0x20 || c == 0x7f) return true;
  }
  return false;
}

// Identifiers end up in tab- and slash-delimited index files, so they may not
// be empty or carry control characters. Class ids may not contain '/', which
// separates name from class in serialized NameClass terms.
inline void check_identifier(std::string_view id, std::string_view what,
                             bool allow_slash) {
  if (id.empty()) {
    throw Error(ErrorCode::kParse, std::string(what) + " is empty");
  }
  if (has_control_char(id) || (!allow_slash && id.find('/') != std::string_view::npos)) {
    throw Error(ErrorCode::kParse,
                std::string(what) + " '" + std::string(id) + "' contains a forbidden character");
  }
}

inline void check_name(std::string_view name, const std::string& owner) {
  if (name.empty() || has_control_char(name)) {
    throw Error(ErrorCode::kInvalidEntity,
                owner + " has an empty name or one with control characters");
  }
}

}  // namespace ontovsm::detail

#endif  // ONTOVSM_SRC_VALIDATE_HPP_
