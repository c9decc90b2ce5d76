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

#include "ontovsm/corpus.hpp"

#include <algorithm>
#include <set>

#include "ontovsm/error.hpp"
#include "validate.hpp"

namespace ontovsm {

namespace {

void check_record_id(std::string_view id, std::string_view what) {
  detail::check_identifier(id, what, /*allow_slash=*/true);
  if (id.find(' ') != std::string_view::npos) {
    throw Error(ErrorCode::kParse,
                std::string(what) + " '" + std::string(id) + "' contains a space");
  }
}

}  // namespace

void validate_annotation(const Annotation& a, const KnowledgeBase& kb,
                         const ClassTaxonomy& taxonomy,
                         std::optional<std::size_t> text_length) {
  if (!a.name && !a.class_id && !a.entity_id) {
    throw Error(ErrorCode::kInvalidAnnotation,
                "annotation specifies none of name, class, identifier");
  }
  if (a.name && (a.name->empty() || detail::has_control_char(*a.name))) {
    throw Error(ErrorCode::kInvalidAnnotation, "annotation name is empty or malformed");
  }
  if (a.class_id && !taxonomy.contains(*a.class_id)) {
    throw Error(ErrorCode::kUnknownClass, "unknown class '" + *a.class_id + "'");
  }
  if (a.entity_id) {
    const EntityRecord& e = kb.resolve(*a.entity_id);
    if (a.class_id && *a.class_id != e.cls) {
      throw Error(ErrorCode::kClassMismatch,
                  "entity '" + e.id + "' has class '" + e.cls + "', annotation says '" +
                      *a.class_id + "'");
    }
    if (a.name && !kb.has_alias(e, *a.name)) {
      throw Error(ErrorCode::kNameMismatch,
                  "'" + *a.name + "' is not an alias of entity '" + e.id + "'");
    }
  }
  if (a.span && text_length) {
    if (a.span->start >= a.span->end || a.span->end > *text_length) {
      throw Error(ErrorCode::kSpanOutOfBounds,
                  "span [" + std::to_string(a.span->start) + ", " +
                      std::to_string(a.span->end) + ") outside text of length " +
                      std::to_string(*text_length));
    }
  }
}

AnnotatedDocument ingest_document(const DocumentRecord& record, const KnowledgeBase& kb,
                                  const ClassTaxonomy& taxonomy,
                                  const Tokenizer& tokenizer) {
  check_record_id(record.doc_id, "doc_id");
  AnnotatedDocument doc;
  doc.doc_id = record.doc_id;
  doc.text = record.text;
  doc.annotations = record.annotations;

  for (const auto& a : doc.annotations) {
    if (!a.span) {
      throw Error(ErrorCode::kInvalidAnnotation,
                  "document '" + doc.doc_id + "' has an annotation without a span");
    }
    validate_annotation(a, kb, taxonomy, doc.text.size());
  }
  std::stable_sort(doc.annotations.begin(), doc.annotations.end(),
                   [](const Annotation& x, const Annotation& y) {
                     return std::pair(x.span->start, x.span->end) <
                            std::pair(y.span->start, y.span->end);
                   });
  for (std::size_t i = 1; i < doc.annotations.size(); ++i) {
    if (doc.annotations[i].span->start < doc.annotations[i - 1].span->end) {
      throw Error(ErrorCode::kOverlappingSpans,
                  "document '" + doc.doc_id + "' has overlapping annotation spans at offset " +
                      std::to_string(doc.annotations[i].span->start));
    }
  }

  // Spans are sorted and disjoint, so one forward sweep suffices.
  std::size_t next = 0;
  for (auto& tok : tokenizer.tokenize_with_offsets(doc.text)) {
    while (next < doc.annotations.size() && doc.annotations[next].span->end <= tok.start) {
      ++next;
    }
    bool overlaps = next < doc.annotations.size() &&
                    doc.annotations[next].span->start < tok.end;
    if (!overlaps) doc.keyword_tokens.push_back(std::move(tok.text));
  }
  return doc;
}

DocumentRecord to_record(const AnnotatedDocument& doc) {
  return {doc.doc_id, doc.text, doc.annotations};
}

void check_unique_ids(const std::vector<AnnotatedDocument>& corpus) {
  std::set<std::string_view> seen;
  for (const auto& d : corpus) {
    if (!seen.insert(d.doc_id).second) {
      throw Error(ErrorCode::kDuplicateDocument, "duplicate doc_id '" + d.doc_id + "'");
    }
  }
}

Annotation complete_from_kb(Annotation a, const KnowledgeBase& kb) {
  if (!a.entity_id) return a;
  const EntityRecord& e = kb.resolve(*a.entity_id);
  if (!a.name) a.name = e.canonical_name();
  if (!a.class_id) a.class_id = e.cls;
  return a;
}

Query ingest_query(const QueryRecord& record, const KnowledgeBase& kb,
                   const ClassTaxonomy& taxonomy, const Tokenizer& tokenizer) {
  check_record_id(record.query_id, "query_id");
  Query q;
  q.query_id = record.query_id;
  for (const auto& k : record.keywords) {
    for (auto& t : tokenizer.tokenize(k)) q.keywords.push_back(std::move(t));
  }
  for (const auto& a : record.entities) {
    if (a.span) {
      throw Error(ErrorCode::kInvalidAnnotation,
                  "query '" + q.query_id + "' has an annotation with a span");
    }
    validate_annotation(a, kb, taxonomy);
    q.annotations.push_back(complete_from_kb(a, kb));
  }
  if (q.keywords.empty() && q.annotations.empty()) {
    throw Error(ErrorCode::kEmptyQuery, "query '" + q.query_id + "' has no keywords or entities");
  }
  return q;
}

Gazetteer::Gazetteer(const KnowledgeBase& kb) : kb_(kb) {
  for (const auto& e : kb.records()) {
    for (const auto& alias : e.names) {
      auto tokens = tokenize(alias);
      if (tokens.empty()) continue;
      max_len_ = std::max(max_len_, tokens.size());
      auto [it, inserted] = phrases_.try_emplace(std::move(tokens));
      if (inserted) it->second.alias = alias;
      it->second.entities.insert(e.id);
    }
  }
}

std::vector<Annotation> Gazetteer::annotate(std::string_view text) const {
  const auto tokens = Tokenizer().tokenize_with_offsets(text);
  std::vector<Annotation> out;
  std::vector<std::string> key;
  std::size_t i = 0;
  while (i < tokens.size()) {
    const Entry* best = nullptr;
    std::size_t best_len = 0;
    const std::size_t limit = std::min(max_len_, tokens.size() - i);
    key.clear();
    for (std::size_t len = 1; len <= limit; ++len) {
      key.push_back(tokens[i + len - 1].text);
      auto it = phrases_.find(key);
      if (it != phrases_.end()) {
        best = &it->second;
        best_len = len;
      }
    }
    if (best == nullptr) {
      ++i;
      continue;
    }
    Annotation a;
    a.span = Span{tokens[i].start, tokens[i + best_len - 1].end};
    a.name = best->alias;
    if (best->entities.size() == 1) {
      const EntityRecord& e = kb_.resolve(*best->entities.begin());
      a.class_id = e.cls;
      a.entity_id = e.id;
    }
    out.push_back(std::move(a));
    i += best_len;
  }
  return out;
}

}  // namespace ontovsm
