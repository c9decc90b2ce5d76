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

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ontovsm/ontology.hpp"

namespace ontovsm {
namespace {

using ::testing::ElementsAre;
using ::testing::UnorderedElementsAre;
using testing::error_of;
using testing::fixture_a;
using testing::fixture_a_classes;
using testing::fixture_a_entities;

TEST(ClassTaxonomyTest, FixtureCountsClassesAndEdges) {
  auto t = ClassTaxonomy::load(fixture_a_classes());
  EXPECT_EQ(t.size(), 8u);
  std::size_t edges = 0;
  for (const auto& c : fixture_a_classes()) edges += c.parents.size();
  EXPECT_EQ(edges, 5u);
  EXPECT_EQ(t.edge_count(), edges);
}

TEST(ClassTaxonomyTest, EmptyListIsValid) {
  auto t = ClassTaxonomy::load({});
  EXPECT_EQ(t.size(), 0u);
  EXPECT_EQ(t.edge_count(), 0u);
}

TEST(ClassTaxonomyTest, SelfLoopIsCycle) {
  EXPECT_EQ(error_of([] { ClassTaxonomy::load({{"Location", {}}, {"City", {"City"}}}); }),
            ErrorCode::kCycle);
}

TEST(ClassTaxonomyTest, LongCycleDetected) {
  EXPECT_EQ(error_of([] { ClassTaxonomy::load({{"A", {"C"}}, {"B", {"A"}}, {"C", {"B"}}}); }),
            ErrorCode::kCycle);
}

TEST(ClassTaxonomyTest, RejectsDuplicatesAndUndeclaredParents) {
  EXPECT_EQ(error_of([] { ClassTaxonomy::load({{"A", {}}, {"A", {}}}); }),
            ErrorCode::kDuplicateClass);
  EXPECT_EQ(error_of([] { ClassTaxonomy::load({{"A", {"Missing"}}}); }),
            ErrorCode::kUndeclaredParent);
}

TEST(ClassTaxonomyTest, RejectsSlashInClassId) {
  EXPECT_TRUE(error_of([] { ClassTaxonomy::load({{"A/B", {}}}); }).has_value());
}

TEST(ClassTaxonomyTest, AncestorsAreReflexiveClosure) {
  auto t = ClassTaxonomy::load(fixture_a_classes());
  EXPECT_THAT(t.ancestors("City"), UnorderedElementsAre("City", "Location"));
  EXPECT_THAT(t.ancestors("Person"), ElementsAre("Person"));
  EXPECT_THAT(t.ancestors("InternationalOrganization"),
              UnorderedElementsAre("InternationalOrganization", "Organization"));
  EXPECT_EQ(error_of([&] { t.ancestors("Planet"); }), ErrorCode::kUnknownClass);
}

TEST(ClassTaxonomyTest, MultipleParentsMergeClosures) {
  auto t = ClassTaxonomy::load(
      {{"Root", {}}, {"L", {"Root"}}, {"R", {"Root"}}, {"Both", {"L", "R"}}, {"Leaf", {"Both"}}});
  EXPECT_THAT(t.ancestors("Leaf"), UnorderedElementsAre("Leaf", "Both", "L", "R", "Root"));
}

TEST(ClassTaxonomyTest, SubclassRelation) {
  auto t = ClassTaxonomy::load(fixture_a_classes());
  EXPECT_TRUE(t.is_subclass("City", "Location"));
  EXPECT_TRUE(t.is_subclass("City", "City"));
  EXPECT_FALSE(t.is_subclass("Location", "City"));
  EXPECT_FALSE(t.is_subclass("City", "Organization"));
}

TEST(ClassTaxonomyTest, DeclsRoundTrip) {
  auto t = ClassTaxonomy::load(fixture_a_classes());
  auto again = ClassTaxonomy::load(t.to_decls());
  EXPECT_EQ(again.size(), t.size());
  EXPECT_EQ(again.edge_count(), t.edge_count());
  EXPECT_EQ(again.ancestors("University"), t.ancestors("University"));
}

TEST(KnowledgeBaseTest, ResolveEntities) {
  auto o = fixture_a();
  const auto& e1 = o.kb.resolve("e1");
  EXPECT_EQ(e1.cls, "City");
  EXPECT_EQ(e1.names.size(), 3u);
  EXPECT_EQ(o.kb.resolve("e4").canonical_name(), "United Nations");
  EXPECT_EQ(error_of([&] { o.kb.resolve("e99"); }), ErrorCode::kUnknownEntity);
  EXPECT_EQ(o.kb.find("e99"), nullptr);
}

TEST(KnowledgeBaseTest, NameIndex) {
  auto o = fixture_a();
  EXPECT_THAT(o.kb.entities_by_name("Saigon"), UnorderedElementsAre("e1", "e2"));
  EXPECT_THAT(o.kb.entities_by_name("Ho Chi Minh City"), UnorderedElementsAre("e1"));
  EXPECT_TRUE(o.kb.entities_by_name("Paris").empty());
  EXPECT_THAT(o.kb.entities_by_name("saigon"), UnorderedElementsAre("e1", "e2"));
}

TEST(KnowledgeBaseTest, AliasCheckIgnoresCase) {
  auto o = fixture_a();
  EXPECT_TRUE(o.kb.has_alias(o.kb.resolve("e5"), "viet nam"));
  EXPECT_FALSE(o.kb.has_alias(o.kb.resolve("e5"), "Saigon"));
}

TEST(KnowledgeBaseTest, RejectsInvalidRecords) {
  auto t = ClassTaxonomy::load(fixture_a_classes());
  EXPECT_EQ(error_of([&] { KnowledgeBase::load({{"e1", "Planet", {"Mars"}}}, t); }),
            ErrorCode::kUnknownClass);
  EXPECT_EQ(error_of([&] {
              KnowledgeBase::load({{"e1", "City", {"A"}}, {"e1", "City", {"B"}}}, t);
            }),
            ErrorCode::kDuplicateEntity);
  EXPECT_EQ(error_of([&] { KnowledgeBase::load({{"e1", "City", {}}}, t); }),
            ErrorCode::kInvalidEntity);
}

TEST(KnowledgeBaseTest, RecordsRoundTrip) {
  auto o = fixture_a();
  auto again = KnowledgeBase::load(o.kb.records(), o.taxonomy);
  EXPECT_EQ(again.size(), fixture_a_entities().size());
  EXPECT_EQ(again.name_index(), o.kb.name_index());
}

}  // namespace
}  // namespace ontovsm
