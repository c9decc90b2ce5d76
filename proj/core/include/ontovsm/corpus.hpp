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

#ifndef ONTOVSM_CORPUS_HPP_
#define ONTOVSM_CORPUS_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontovsm/ontology.hpp"
#include "ontovsm/text.hpp"

namespace ontovsm {

struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  friend bool operator==(const Span&, const Span&) = default;
};

// A partially specified (name, class, identifier) triple. An empty optional
// is the unspecified '*' component.
struct Annotation {
  std::optional<Span> span;  // absent on query annotations
  std::optional<std::string> name;
  std::optional<std::string> class_id;
  std::optional<std::string> entity_id;

  friend bool operator==(const Annotation&, const Annotation&) = default;
};

// Checks the annotation invariants against the KB: at least one component
// given, known class and entity, class and name consistent with the entity,
// and (if text_length is given) the span inside the text.
void validate_annotation(const Annotation& a, const KnowledgeBase& kb,
                         const ClassTaxonomy& taxonomy,
                         std::optional<std::size_t> text_length = std::nullopt);

// Raw form of one corpus line before validation.
struct DocumentRecord {
  std::string doc_id;
  std::string text;
  std::vector<Annotation> annotations;
};

struct AnnotatedDocument {
  std::string doc_id;
  std::string text;
  std::vector<Annotation> annotations;   // sorted by span start
  std::vector<std::string> keyword_tokens;  // tokens outside every span

  friend bool operator==(const AnnotatedDocument&, const AnnotatedDocument&) = default;
};

// Validates the record and derives keyword_tokens. A token that overlaps any
// annotation span is excluded, so every token is counted either as a keyword
// or as part of an entity, never both.
AnnotatedDocument ingest_document(const DocumentRecord& record, const KnowledgeBase& kb,
                                  const ClassTaxonomy& taxonomy,
                                  const Tokenizer& tokenizer = {});

// Inverse of ingest_document, for serialization.
DocumentRecord to_record(const AnnotatedDocument& doc);

// Throws kDuplicateDocument if two documents share an id.
void check_unique_ids(const std::vector<AnnotatedDocument>& corpus);

struct QueryRecord {
  std::string query_id;
  std::vector<std::string> keywords;
  std::vector<Annotation> entities;
};

struct Query {
  std::string query_id;
  std::vector<std::string> keywords;      // tokenized, folded
  std::vector<Annotation> annotations;    // spanless, KB-completed

  friend bool operator==(const Query&, const Query&) = default;
};

// Fills name and class of an identified annotation from the KB when they
// are unspecified (canonical name, entity class).
Annotation complete_from_kb(Annotation a, const KnowledgeBase& kb);

// Tokenizes the keyword strings, validates and completes the annotations.
// Throws kEmptyQuery when neither keywords nor annotations remain.
Query ingest_query(const QueryRecord& record, const KnowledgeBase& kb,
                   const ClassTaxonomy& taxonomy, const Tokenizer& tokenizer = {});

// Dictionary matcher over KB aliases. Matching runs over the token stream:
// at each position the longest alias wins, and matched tokens are consumed.
class Gazetteer {
 public:
  explicit Gazetteer(const KnowledgeBase& kb);

  std::vector<Annotation> annotate(std::string_view text) const;

 private:
  struct Entry {
    std::string alias;  // original spelling of the smallest matching alias
    std::set<std::string> entities;
  };
  const KnowledgeBase& kb_;
  std::map<std::vector<std::string>, Entry> phrases_;
  std::size_t max_len_ = 0;
};

inline std::vector<Annotation> gazetteer_annotate(std::string_view text,
                                                  const KnowledgeBase& kb) {
  return Gazetteer(kb).annotate(text);
}

}  // namespace ontovsm

#endif  // ONTOVSM_CORPUS_HPP_
