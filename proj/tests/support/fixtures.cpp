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

#include "fixtures.hpp"

#include <stdexcept>

namespace ontovsm::testing {

std::vector<ClassDecl> fixture_a_classes() {
  return {
      {"Location", {}},
      {"City", {"Location"}},
      {"River", {"Location"}},
      {"Country", {"Location"}},
      {"Organization", {}},
      {"University", {"Organization"}},
      {"InternationalOrganization", {"Organization"}},
      {"Person", {}},
  };
}

std::vector<EntityRecord> fixture_a_entities() {
  return {
      {"e1", "City", {"Saigon City", "Ho Chi Minh City", "Saigon"}},
      {"e2", "River", {"Saigon River", "Saigon"}},
      {"e3", "University", {"Hanoi University of Technology"}},
      {"e4", "InternationalOrganization", {"United Nations", "UN"}},
      {"e5", "Country", {"Vietnam", "Viet Nam"}},
  };
}

Ontology fixture_a() {
  Ontology o;
  o.taxonomy = ClassTaxonomy::load(fixture_a_classes());
  o.kb = KnowledgeBase::load(fixture_a_entities(), o.taxonomy);
  return o;
}

Ontology fixture_a_with_people() {
  auto classes = fixture_a_classes();
  classes.push_back({"Politician", {"Person"}});
  auto entities = fixture_a_entities();
  entities.push_back({"e6", "Politician", {"Ngo Dinh Diem", "Diem"}});
  Ontology o;
  o.taxonomy = ClassTaxonomy::load(classes);
  o.kb = KnowledgeBase::load(entities, o.taxonomy);
  return o;
}

Annotation mention(const std::string& text, const std::string& surface,
                   std::optional<std::string> name, std::optional<std::string> cls,
                   std::optional<std::string> id) {
  auto pos = text.find(surface);
  if (pos == std::string::npos) throw std::logic_error("surface not in text: " + surface);
  return {Span{pos, pos + surface.size()}, std::move(name), std::move(cls), std::move(id)};
}

Annotation query_entity(std::optional<std::string> name, std::optional<std::string> cls,
                        std::optional<std::string> id) {
  return {std::nullopt, std::move(name), std::move(cls), std::move(id)};
}

std::vector<DocumentRecord> fixture_b_records() {
  const std::string t1 = "Ho Chi Minh City is growing fast";
  const std::string t2 = "the Saigon River flows";
  return {
      {"d1", t1, {mention(t1, "Ho Chi Minh City", "Ho Chi Minh City", "City", "e1")}},
      {"d2", t2, {mention(t2, "Saigon River", "Saigon River", "River", "e2")}},
      {"d3", "growing cities", {}},
  };
}

std::vector<DocumentRecord> fixture_c_records() {
  const std::string t1 = "Vietnam joined the United Nations";
  const std::string t2 = "the United Nations met in Geneva";
  const std::string t3 = "Vietnam exports rice";
  return {
      {"d1", t1,
       {mention(t1, "Vietnam", "Vietnam", "Country", "e5"),
        mention(t1, "United Nations", "United Nations", "InternationalOrganization", "e4")}},
      {"d2", t2,
       {mention(t2, "United Nations", "United Nations", "InternationalOrganization", "e4")}},
      {"d3", t3, {mention(t3, "Vietnam", "Vietnam", "Country", "e5")}},
  };
}

QueryRecord united_nations_query() {
  return {"q1",
          {"joined", "newly"},
          {query_entity(std::nullopt, "Country", std::nullopt),
           query_entity("United Nations", "InternationalOrganization", "e4")}};
}

std::vector<AnnotatedDocument> ingest_all(const std::vector<DocumentRecord>& records,
                                          const Ontology& o) {
  std::vector<AnnotatedDocument> docs;
  for (const auto& r : records) docs.push_back(ingest_document(r, o.kb, o.taxonomy));
  return docs;
}

std::optional<ErrorCode> error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace ontovsm::testing
