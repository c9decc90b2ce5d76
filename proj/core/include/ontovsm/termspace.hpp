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

#ifndef ONTOVSM_TERMSPACE_HPP_
#define ONTOVSM_TERMSPACE_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>

#include "ontovsm/corpus.hpp"
#include "ontovsm/ontology.hpp"

namespace ontovsm {

enum class TermKind : std::uint8_t {
  kName = 0,
  kClass = 1,
  kNameClass = 2,
  kIdentifier = 3,
  kKeyword = 4,
};

inline constexpr int kNumTermKinds = 5;

// A dimension of the generalized vector space. Terms of different kinds
// never compare equal, whatever their payload. Names are stored case-folded;
// class ids and entity ids verbatim.
class GeneralizedTerm {
 public:
  static GeneralizedTerm name(std::string_view n);
  static GeneralizedTerm cls(std::string_view c);
  static GeneralizedTerm name_class(std::string_view n, std::string_view c);
  static GeneralizedTerm identifier(std::string_view id);
  static GeneralizedTerm keyword(std::string_view k);

  TermKind kind() const { return kind_; }
  // Name, class, identifier or keyword; the name for NameClass terms.
  const std::string& primary() const { return primary_; }
  // The class for NameClass terms, empty otherwise.
  const std::string& secondary() const { return secondary_; }

  // N:<name> | C:<class> | NC:<name>/<class> | I:<id> | K:<token>
  std::string to_string() const;
  // Throws kParse.
  static GeneralizedTerm parse(std::string_view s);

  friend auto operator<=>(const GeneralizedTerm&, const GeneralizedTerm&) = default;

 private:
  GeneralizedTerm(TermKind kind, std::string primary, std::string secondary = {})
      : kind_(kind), primary_(std::move(primary)), secondary_(std::move(secondary)) {}

  TermKind kind_;
  std::string primary_;
  std::string secondary_;
};

using TermMultiset = std::map<GeneralizedTerm, std::uint32_t>;
using TermSet = std::set<GeneralizedTerm>;

// Document-side expansion of one entity occurrence: every alias of an
// identified entity and every ancestor of its class get one count, as does
// each alias × ancestor pair and the identifier itself.
TermMultiset expand_annotation_doc(const Annotation& a, const KnowledgeBase& kb,
                                   const ClassTaxonomy& taxonomy);

// One term per specified feature level, no alias or taxonomy expansion.
TermSet query_terms_overlapped(const Annotation& a);

// The single most specific term: I, else NC, else C, else N.
GeneralizedTerm query_terms_nonoverlapped_term(const Annotation& a);
TermSet query_terms_nonoverlapped(const Annotation& a);

// Keyword tokens plus all entity expansions, in one multiset.
TermMultiset unified_terms_doc(const AnnotatedDocument& d, const KnowledgeBase& kb,
                               const ClassTaxonomy& taxonomy);

// Query keywords (one count per occurrence) plus the most specific term of
// each annotation.
TermMultiset unified_terms_query(const Query& q);

// Adds every entry of `from` into `into`.
void merge_into(TermMultiset& into, const TermMultiset& from);

}  // namespace ontovsm

#endif  // ONTOVSM_TERMSPACE_HPP_
