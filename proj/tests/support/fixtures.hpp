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

#ifndef ONTOVSM_TESTS_SUPPORT_FIXTURES_HPP_
#define ONTOVSM_TESTS_SUPPORT_FIXTURES_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ontovsm/corpus.hpp"
#include "ontovsm/error.hpp"
#include "ontovsm/ontology.hpp"

namespace ontovsm::testing {

// Classes Location, City, River, Country, Organization, University,
// InternationalOrganization, Person; entities
//   e1 City ["Saigon City", "Ho Chi Minh City", "Saigon"]
//   e2 River ["Saigon River", "Saigon"]
//   e3 University ["Hanoi University of Technology"]
//   e4 InternationalOrganization ["United Nations", "UN"]
//   e5 Country ["Vietnam", "Viet Nam"]
std::vector<ClassDecl> fixture_a_classes();
std::vector<EntityRecord> fixture_a_entities();

struct Ontology {
  ClassTaxonomy taxonomy;
  KnowledgeBase kb;
};

Ontology fixture_a();

// fixture_a plus Politician ⊂ Person and e6 Politician ["Ngo Dinh Diem", "Diem"].
Ontology fixture_a_with_people();

// An annotation over the first occurrence of `surface` in `text`.
Annotation mention(const std::string& text, const std::string& surface,
                   std::optional<std::string> name, std::optional<std::string> cls,
                   std::optional<std::string> id);

Annotation query_entity(std::optional<std::string> name, std::optional<std::string> cls,
                        std::optional<std::string> id);

// d1 "Ho Chi Minh City is growing fast" (Ho Chi Minh City, City, e1)
// d2 "the Saigon River flows" (Saigon River, River, e2)
// d3 "growing cities"
std::vector<DocumentRecord> fixture_b_records();

// d1 mentions e5 and e4, d2 only e4, d3 only e5.
std::vector<DocumentRecord> fixture_c_records();

// The "Countries have newly joined the United Nations" query, with keywords
// joined and newly, and entities (*, Country, *) and
// (United Nations, InternationalOrganization, e4).
QueryRecord united_nations_query();

// The code of the ontovsm::Error thrown by f, or nullopt if f returns.
std::optional<ErrorCode> error_of(const std::function<void()>& f);

std::vector<AnnotatedDocument> ingest_all(const std::vector<DocumentRecord>& records,
                                          const Ontology& o);

}  // namespace ontovsm::testing

#endif  // ONTOVSM_TESTS_SUPPORT_FIXTURES_HPP_
