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

#ifndef ONTOVSM_TEXT_HPP_
#define ONTOVSM_TEXT_HPP_

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ontovsm {

// ASCII case folding. Bytes outside ASCII are left untouched so UTF-8
// sequences survive intact.
std::string fold_case(std::string_view s);

struct Token {
  std::string text;   // case-folded
  std::size_t start;  // byte offset into the source text
  std::size_t end;    // one past the last byte
};

// Splits text into case-folded maximal runs of letters and digits. Bytes
// >= 0x80 count as letters, so non-ASCII words are kept whole. No stemming.
class Tokenizer {
 public:
  Tokenizer() = default;
  explicit Tokenizer(std::set<std::string> stopwords);

  std::vector<Token> tokenize_with_offsets(std::string_view text) const;
  std::vector<std::string> tokenize(std::string_view text) const;

  const std::set<std::string>& stopwords() const { return stopwords_; }

  friend bool operator==(const Tokenizer&, const Tokenizer&) = default;

 private:
  std::set<std::string> stopwords_;  // stored folded
};

// Tokenizes with no stopword list.
std::vector<std::string> tokenize(std::string_view text);

// One stopword per line; blank lines and lines starting with '#' ignored.
std::set<std::string> read_stopwords(const std::string& path);

}  // namespace ontovsm

#endif  // ONTOVSM_TEXT_HPP_
