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

#include "ontovsm/ontology.hpp"

#include <algorithm>

#include "ontovsm/error.hpp"
#include "ontovsm/text.hpp"
#include "validate.hpp"

namespace ontovsm {

ClassTaxonomy ClassTaxonomy::load(const std::vector<ClassDecl>& decls) {
  ClassTaxonomy t;
  for (const auto& d : decls) {
    detail::check_identifier(d.id, "class id", /*allow_slash=*/false);
    if (t.nodes_.contains(d.id)) {
      throw Error(ErrorCode::kDuplicateClass, "duplicate class id '" + d.id + "'");
    }
    Node n;
    n.parents = d.parents;
    std::sort(n.parents.begin(), n.parents.end());
    n.parents.erase(std::unique(n.parents.begin(), n.parents.end()), n.parents.end());
    t.edge_count_ += n.parents.size();
    t.nodes_.emplace(d.id, std::move(n));
  }
  for (const auto& [id, n] : t.nodes_) {
    for (const auto& p : n.parents) {
      if (!t.nodes_.contains(p)) {
        throw Error(ErrorCode::kUndeclaredParent,
                    "class '" + id + "' names undeclared parent '" + p + "'");
      }
    }
  }

  // Depth-first closure with three-colour cycle detection.
  enum class Mark { kNew, kActive, kDone };
  std::map<std::string, Mark, std::less<>> mark;
  for (const auto& [id, _] : t.nodes_) mark[id] = Mark::kNew;

  auto visit = [&](auto&& self, const std::string& id) -> void {
    Mark& m = mark[id];
    if (m == Mark::kDone) return;
    if (m == Mark::kActive) {
      throw Error(ErrorCode::kCycle, "class hierarchy has a cycle through '" + id + "'");
    }
    m = Mark::kActive;
    Node& n = t.nodes_.find(id)->second;
    std::set<std::string> closure{id};
    for (const auto& p : n.parents) {
      self(self, p);
      const auto& up = t.nodes_.find(p)->second.ancestors;
      closure.insert(up.begin(), up.end());
    }
    n.ancestors.assign(closure.begin(), closure.end());
    mark[id] = Mark::kDone;
  };
  for (const auto& [id, _] : t.nodes_) visit(visit, id);
  return t;
}

bool ClassTaxonomy::contains(std::string_view cls) const {
  return nodes_.find(cls) != nodes_.end();
}

const ClassTaxonomy::Node& ClassTaxonomy::node(std::string_view cls) const {
  auto it = nodes_.find(cls);
  if (it == nodes_.end()) {
    throw Error(ErrorCode::kUnknownClass, "unknown class '" + std::string(cls) + "'");
  }
  return it->second;
}

const std::vector<std::string>& ClassTaxonomy::ancestors(std::string_view cls) const {
  return node(cls).ancestors;
}

bool ClassTaxonomy::is_subclass(std::string_view sub, std::string_view sup) const {
  node(sup);
  const auto& up = node(sub).ancestors;
  return std::binary_search(up.begin(), up.end(), sup);
}

const std::vector<std::string>& ClassTaxonomy::parents(std::string_view cls) const {
  return node(cls).parents;
}

std::vector<ClassDecl> ClassTaxonomy::to_decls() const {
  std::vector<ClassDecl> out;
  out.reserve(nodes_.size());
  for (const auto& [id, n] : nodes_) out.push_back({id, n.parents});
  return out;
}

KnowledgeBase KnowledgeBase::load(std::vector<EntityRecord> records,
                                  const ClassTaxonomy& taxonomy) {
  KnowledgeBase kb;
  for (auto& r : records) {
    detail::check_identifier(r.id, "entity id", /*allow_slash=*/true);
    if (kb.entities_.contains(r.id)) {
      throw Error(ErrorCode::kDuplicateEntity, "duplicate entity id '" + r.id + "'");
    }
    if (!taxonomy.contains(r.cls)) {
      throw Error(ErrorCode::kUnknownClass,
                  "entity '" + r.id + "' has unknown class '" + r.cls + "'");
    }
    if (r.names.empty()) {
      throw Error(ErrorCode::kInvalidEntity, "entity '" + r.id + "' has no names");
    }
    std::set<std::string> seen;
    for (const auto& n : r.names) {
      detail::check_name(n, "entity '" + r.id + "'");
      if (!seen.insert(fold_case(n)).second) {
        throw Error(ErrorCode::kInvalidEntity,
                    "entity '" + r.id + "' lists name '" + n + "' twice");
      }
    }
    for (const auto& folded : seen) kb.name_index_[folded].insert(r.id);
    std::string id = r.id;
    kb.entities_.emplace(std::move(id), std::move(r));
  }
  return kb;
}

const EntityRecord* KnowledgeBase::find(std::string_view id) const {
  auto it = entities_.find(id);
  return it == entities_.end() ? nullptr : &it->second;
}

const EntityRecord& KnowledgeBase::resolve(std::string_view id) const {
  if (const auto* e = find(id)) return *e;
  throw Error(ErrorCode::kUnknownEntity, "unknown entity id '" + std::string(id) + "'");
}

std::set<std::string> KnowledgeBase::entities_by_name(std::string_view name) const {
  auto it = name_index_.find(fold_case(name));
  return it == name_index_.end() ? std::set<std::string>{} : it->second;
}

bool KnowledgeBase::has_alias(const EntityRecord& entity, std::string_view name) const {
  const auto folded = fold_case(name);
  return std::any_of(entity.names.begin(), entity.names.end(),
                     [&](const std::string& n) { return fold_case(n) == folded; });
}

std::vector<EntityRecord> KnowledgeBase::records() const {
  std::vector<EntityRecord> out;
  out.reserve(entities_.size());
  for (const auto& [_, e] : entities_) out.push_back(e);
  return out;
}

}  // namespace ontovsm
