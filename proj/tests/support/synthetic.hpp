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

#ifndef ONTOVSM_TESTS_SUPPORT_SYNTHETIC_HPP_
#define ONTOVSM_TESTS_SUPPORT_SYNTHETIC_HPP_

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "ontovsm/corpus.hpp"
#include "ontovsm/ontology.hpp"

namespace ontovsm::testing {

// Seeded generator of complete test collections. The taxonomy is five levels
// deep with one class under two parents; several entities share an alias, so
// ambiguous names occur. Document annotations mix every specification level
// (full triples, name+class, name only, class only, identifier only).
struct SyntheticCollection {
  std::vector<ClassDecl> classes;
  std::vector<EntityRecord> entities;
  std::vector<DocumentRecord> docs;
  std::vector<QueryRecord> queries;
  // (query_id, doc_id, relevant); every query has at least one relevant doc.
  std::vector<std::tuple<std::string, std::string, bool>> qrels;
};

struct SyntheticOptions {
  std::uint64_t seed = 1;
  int num_docs = 30;
  int num_queries = 12;
  // When false every query has both keywords and entities.
  bool allow_partial_queries = false;
  // When false documents carry no annotations.
  bool annotate = true;
};

SyntheticCollection make_synthetic(const SyntheticOptions& options = {});

// Writes taxonomy.jsonl, kb.jsonl, corpus.jsonl, queries.jsonl and qrels.txt.
void write_synthetic(const SyntheticCollection& c, const std::filesystem::path& dir);

// Deterministic small-range draw that does not depend on the standard
// library's distribution implementations.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  bool chance(int percent) { return below(100) < static_cast<std::size_t>(percent); }
  template <typename T>
  const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace ontovsm::testing

#endif  // ONTOVSM_TESTS_SUPPORT_SYNTHETIC_HPP_
