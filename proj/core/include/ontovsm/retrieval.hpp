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

#ifndef ONTOVSM_RETRIEVAL_HPP_
#define ONTOVSM_RETRIEVAL_HPP_

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ontovsm/corpus.hpp"
#include "ontovsm/index.hpp"

namespace ontovsm {

enum class ModelKind {
  kKeyword,                        // kw
  kEntityOverlapped,               // ne-o
  kEntityNonOverlapped,            // ne-n
  kKeywordAndEntityOverlapped,     // kw-and-ne-o
  kKeywordAndEntityNonOverlapped,  // kw-and-ne-n
  kKeywordOrEntityOverlapped,      // kw-or-ne-o
  kKeywordOrEntityNonOverlapped,   // kw-or-ne-n
  kUnified,                        // kw-plus-ne
};

inline constexpr std::array<ModelKind, 8> kAllModels = {
    ModelKind::kKeyword,
    ModelKind::kEntityOverlapped,
    ModelKind::kEntityNonOverlapped,
    ModelKind::kKeywordAndEntityOverlapped,
    ModelKind::kKeywordAndEntityNonOverlapped,
    ModelKind::kKeywordOrEntityOverlapped,
    ModelKind::kKeywordOrEntityNonOverlapped,
    ModelKind::kUnified,
};

std::string_view model_name(ModelKind m);
// Throws kUnknownModel.
ModelKind parse_model(std::string_view name);

bool uses_overlapped_terms(ModelKind m);
bool uses_entity_sum(ModelKind m);   // scored with the four-space weighted sum
bool uses_keyword_mix(ModelKind m);  // the weighted sum mixed with keywords by alpha

// Weights of the four entity spaces and the entity/keyword mix.
struct ModelConfig {
  double w_name = 0.25;
  double w_class = 0.25;
  double w_name_class = 0.25;
  double w_identifier = 0.25;
  double alpha = 0.5;

  // Weights non-negative and summing to 1 (within 1e-9), alpha in [0, 1].
  // Throws kInvalidConfig.
  void validate() const;
};

struct ScoredDoc {
  std::string doc_id;
  double score;

  friend bool operator==(const ScoredDoc&, const ScoredDoc&) = default;
};

struct RankedResult {
  std::string query_id;
  ModelKind model;
  std::vector<ScoredDoc> results;  // score descending, then doc_id ascending
};

// A query resolved against one index for one model: the per-space query
// vectors (tf = 1 per distinct term, index idf) and the filter term sets.
// Build once, then filter and score any number of documents.
class PreparedQuery {
 public:
  // Throws kEmptyQuery if the query has no terms the model can use.
  PreparedQuery(const InvertedIndex& ix, const Query& q, ModelKind model);

  // Candidate documents of the Boolean stage, ascending.
  std::vector<DocNo> filter() const;

  // Similarity in [0, 1]. cfg must be valid.
  double score(DocNo doc, const ModelConfig& cfg) const;

  // Cosine between the document and the query in one space; 0 when either
  // vector is all-zero.
  double cosine(DocNo doc, Space space) const;

  ModelKind model() const { return model_; }

 private:
  struct SpaceQuery {
    std::vector<TermId> terms;  // query terms present in the dictionary
    bool has_terms = false;     // query named at least one term here
    SparseVector vector;
    double norm = 0.0;
  };

  void add_terms(Space space, const TermSet& terms);
  std::vector<DocNo> union_postings(Space space) const;
  std::vector<DocNo> entity_filter() const;
  bool has_entity_terms() const;

  const InvertedIndex& ix_;
  ModelKind model_;
  std::array<SpaceQuery, kNumSpaces> spaces_;
};

// Stage one: the Boolean filter. Returns doc ids, ascending.
std::vector<std::string> filter(const InvertedIndex& ix, const Query& q, ModelKind model);

// Similarity of one indexed document. Throws kUnknownDocument, kInvalidConfig
// or kEmptyQuery.
double score(const InvertedIndex& ix, std::string_view doc_id, const Query& q, ModelKind model,
             const ModelConfig& cfg);

// Filter, score every candidate, sort, keep the first k.
RankedResult search(const InvertedIndex& ix, const Query& q, ModelKind model,
                    const ModelConfig& cfg, std::size_t k);

}  // namespace ontovsm

#endif  // ONTOVSM_RETRIEVAL_HPP_
