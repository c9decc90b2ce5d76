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

#ifndef ONTOVSM_TESTS_SUPPORT_NAIVE_SCORER_HPP_
#define ONTOVSM_TESTS_SUPPORT_NAIVE_SCORER_HPP_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ontovsm/corpus.hpp"
#include "ontovsm/ontology.hpp"

namespace ontovsm::testing {

// Brute-force reference for the index and all eight models. It shares only
// the plain record structs with the library: tokenization, alias and
// subclass expansion, tf/df/idf, filtering and cosine are all recomputed here
// from raw records, with string-keyed maps and no inverted index.
//
// Spaces are "N", "C", "NC", "I", "KW" (tokens outside entity spans),
// "BASE" (all tokens) and "U" (N, C, NC, I and KW together). Terms are keyed
// by their serialized form, e.g. "NC:saigon/City".
class NaiveScorer {
 public:
  NaiveScorer(std::vector<DocumentRecord> docs, const std::vector<ClassDecl>& classes,
              const std::vector<EntityRecord>& entities);

  double tf(const std::string& doc_id, const std::string& space,
            const std::string& term) const;
  int df(const std::string& space, const std::string& term) const;
  double idf(const std::string& space, const std::string& term) const;
  double weight(const std::string& doc_id, const std::string& space,
                const std::string& term) const;

  // Model names as on the command line: kw, ne-o, ..., kw-plus-ne.
  // An empty result means the query has no terms the model can use.
  std::set<std::string> filter(const QueryRecord& q, const std::string& model) const;
  double score(const std::string& doc_id, const QueryRecord& q, const std::string& model,
               const std::vector<double>& weights, double alpha) const;

  // Per-space query term sets, for inspection.
  std::map<std::string, std::set<std::string>> query_terms(const QueryRecord& q,
                                                           const std::string& model) const;

  std::vector<std::string> doc_ids() const;

 private:
  using Counts = std::map<std::string, double>;
  struct Doc {
    std::map<std::string, Counts> spaces;
  };

  std::set<std::string> ancestors(const std::string& cls) const;
  static std::vector<std::string> words(const std::string& text);
  static std::string lower(const std::string& s);
  double cosine(const std::string& doc_id, const std::string& space,
                const std::set<std::string>& query) const;
  std::set<std::string> docs_with_any(const std::string& space,
                                      const std::set<std::string>& terms) const;

  std::map<std::string, std::vector<std::string>> parents_;
  std::map<std::string, EntityRecord> entities_;
  std::map<std::string, Doc> docs_;
};

}  // namespace ontovsm::testing

#endif  // ONTOVSM_TESTS_SUPPORT_NAIVE_SCORER_HPP_
