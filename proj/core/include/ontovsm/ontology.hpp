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

#ifndef ONTOVSM_ONTOLOGY_HPP_
#define ONTOVSM_ONTOLOGY_HPP_

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ontovsm {

// One record of a taxonomy source: a class and its direct parents.
struct ClassDecl {
  std::string id;
  std::vector<std::string> parents;
};

// Class subsumption DAG. Immutable once built; the reflexive-transitive
// ancestor closure is computed at load time.
class ClassTaxonomy {
 public:
  ClassTaxonomy() = default;

  // Throws kDuplicateClass, kUndeclaredParent or kCycle.
  static ClassTaxonomy load(const std::vector<ClassDecl>& decls);

  bool contains(std::string_view cls) const;

  // {cls} plus every proper ancestor, sorted. Throws kUnknownClass.
  const std::vector<std::string>& ancestors(std::string_view cls) const;

  // True iff sup is an ancestor of sub (reflexive). Throws kUnknownClass.
  bool is_subclass(std::string_view sub, std::string_view sup) const;

  const std::vector<std::string>& parents(std::string_view cls) const;

  std::size_t size() const { return nodes_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  // Declaration order is not kept; classes come back sorted.
  std::vector<ClassDecl> to_decls() const;

 private:
  struct Node {
    std::vector<std::string> parents;
    std::vector<std::string> ancestors;
  };
  const Node& node(std::string_view cls) const;

  std::map<std::string, Node, std::less<>> nodes_;
  std::size_t edge_count_ = 0;
};

struct EntityRecord {
  std::string id;
  std::string cls;
  std::vector<std::string> names;  // first is canonical

  const std::string& canonical_name() const { return names.front(); }
};

// Entity records plus the alias → entity inverse index. Names are matched
// after case folding.
class KnowledgeBase {
 public:
  KnowledgeBase() = default;

  // Throws kDuplicateEntity, kUnknownClass or kInvalidEntity (empty or
  // duplicated names).
  static KnowledgeBase load(std::vector<EntityRecord> records,
                            const ClassTaxonomy& taxonomy);

  // Throws kUnknownEntity.
  const EntityRecord& resolve(std::string_view id) const;
  const EntityRecord* find(std::string_view id) const;

  // Identifiers whose alias list contains name (case-insensitive).
  std::set<std::string> entities_by_name(std::string_view name) const;

  // True iff name is one of the entity's aliases (case-insensitive).
  bool has_alias(const EntityRecord& entity, std::string_view name) const;

  // Folded alias → identifiers, for dictionary matchers.
  const std::map<std::string, std::set<std::string>>& name_index() const {
    return name_index_;
  }

  std::size_t size() const { return entities_.size(); }

  // Records sorted by identifier.
  std::vector<EntityRecord> records() const;

 private:
  std::map<std::string, EntityRecord, std::less<>> entities_;
  std::map<std::string, std::set<std::string>> name_index_;
};

// Free-function forms of the ontology queries.
inline const std::vector<std::string>& ancestors(const ClassTaxonomy& t,
                                                 std::string_view cls) {
  return t.ancestors(cls);
}
inline bool is_subclass(const ClassTaxonomy& t, std::string_view sub,
                        std::string_view sup) {
  return t.is_subclass(sub, sup);
}
inline const EntityRecord& resolve_entity(const KnowledgeBase& kb,
                                          std::string_view id) {
  return kb.resolve(id);
}
inline std::set<std::string> entities_by_name(const KnowledgeBase& kb,
                                              std::string_view name) {
  return kb.entities_by_name(name);
}

}  // namespace ontovsm

#endif  // ONTOVSM_ONTOLOGY_HPP_
