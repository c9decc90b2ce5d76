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

#include "ontovsm/termspace.hpp"

#include <vector>

#include "ontovsm/error.hpp"
#include "ontovsm/text.hpp"

namespace ontovsm {

GeneralizedTerm GeneralizedTerm::name(std::string_view n) {
  return {TermKind::kName, fold_case(n)};
}
GeneralizedTerm GeneralizedTerm::cls(std::string_view c) {
  return {TermKind::kClass, std::string(c)};
}
GeneralizedTerm GeneralizedTerm::name_class(std::string_view n, std::string_view c) {
  return {TermKind::kNameClass, fold_case(n), std::string(c)};
}
GeneralizedTerm GeneralizedTerm::identifier(std::string_view id) {
  return {TermKind::kIdentifier, std::string(id)};
}
GeneralizedTerm GeneralizedTerm::keyword(std::string_view k) {
  return {TermKind::kKeyword, fold_case(k)};
}

std::string GeneralizedTerm::to_string() const {
  switch (kind_) {
    case TermKind::kName: return "N:" + primary_;
    case TermKind::kClass: return "C:" + primary_;
    case TermKind::kNameClass: return "NC:" + primary_ + "/" + secondary_;
    case TermKind::kIdentifier: return "I:" + primary_;
    case TermKind::kKeyword: return "K:" + primary_;
  }
  return {};
}

GeneralizedTerm GeneralizedTerm::parse(std::string_view s) {
  auto colon = s.find(':');
  if (colon == std::string_view::npos || colon + 1 >= s.size()) {
    throw Error(ErrorCode::kParse, "malformed term '" + std::string(s) + "'");
  }
  auto tag = s.substr(0, colon);
  auto body = s.substr(colon + 1);
  if (tag == "N") return name(body);
  if (tag == "C") return cls(body);
  if (tag == "I") return identifier(body);
  if (tag == "K") return keyword(body);
  if (tag == "NC") {
    // Class ids never contain '/', names may.
    auto slash = body.rfind('/');
    if (slash == std::string_view::npos || slash == 0 || slash + 1 == body.size()) {
      throw Error(ErrorCode::kParse, "malformed name-class term '" + std::string(s) + "'");
    }
    return name_class(body.substr(0, slash), body.substr(slash + 1));
  }
  throw Error(ErrorCode::kParse, "unknown term tag in '" + std::string(s) + "'");
}

void merge_into(TermMultiset& into, const TermMultiset& from) {
  for (const auto& [t, n] : from) into[t] += n;
}

TermMultiset expand_annotation_doc(const Annotation& a, const KnowledgeBase& kb,
                                   const ClassTaxonomy& taxonomy) {
  std::vector<std::string_view> names;
  std::string_view cls;
  const EntityRecord* entity = nullptr;
  if (a.entity_id) {
    entity = &kb.resolve(*a.entity_id);
    for (const auto& n : entity->names) names.push_back(n);
    cls = entity->cls;
  } else if (a.name) {
    names.push_back(*a.name);
  }
  if (a.class_id) cls = *a.class_id;

  TermMultiset out;
  const std::vector<std::string>* classes = nullptr;
  if (!cls.empty()) classes = &taxonomy.ancestors(cls);

  for (auto n : names) out[GeneralizedTerm::name(n)] = 1;
  if (classes != nullptr) {
    for (const auto& c : *classes) out[GeneralizedTerm::cls(c)] = 1;
    for (auto n : names) {
      for (const auto& c : *classes) out[GeneralizedTerm::name_class(n, c)] = 1;
    }
  }
  if (entity != nullptr) out[GeneralizedTerm::identifier(entity->id)] = 1;
  return out;
}

TermSet query_terms_overlapped(const Annotation& a) {
  TermSet out;
  if (a.name) out.insert(GeneralizedTerm::name(*a.name));
  if (a.class_id) out.insert(GeneralizedTerm::cls(*a.class_id));
  if (a.name && a.class_id) out.insert(GeneralizedTerm::name_class(*a.name, *a.class_id));
  if (a.entity_id) out.insert(GeneralizedTerm::identifier(*a.entity_id));
  return out;
}

GeneralizedTerm query_terms_nonoverlapped_term(const Annotation& a) {
  if (a.entity_id) return GeneralizedTerm::identifier(*a.entity_id);
  if (a.name && a.class_id) return GeneralizedTerm::name_class(*a.name, *a.class_id);
  if (a.class_id) return GeneralizedTerm::cls(*a.class_id);
  if (a.name) return GeneralizedTerm::name(*a.name);
  throw Error(ErrorCode::kInvalidAnnotation,
              "annotation specifies none of name, class, identifier");
}

TermSet query_terms_nonoverlapped(const Annotation& a) {
  return {query_terms_nonoverlapped_term(a)};
}

TermMultiset unified_terms_doc(const AnnotatedDocument& d, const KnowledgeBase& kb,
                               const ClassTaxonomy& taxonomy) {
  TermMultiset out;
  for (const auto& k : d.keyword_tokens) ++out[GeneralizedTerm::keyword(k)];
  for (const auto& a : d.annotations) merge_into(out, expand_annotation_doc(a, kb, taxonomy));
  return out;
}

TermMultiset unified_terms_query(const Query& q) {
  TermMultiset out;
  for (const auto& k : q.keywords) ++out[GeneralizedTerm::keyword(k)];
  for (const auto& a : q.annotations) ++out[query_terms_nonoverlapped_term(a)];
  return out;
}

}  // namespace ontovsm
