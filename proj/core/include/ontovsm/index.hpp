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

#ifndef ONTOVSM_INDEX_HPP_
#define ONTOVSM_INDEX_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ontovsm/corpus.hpp"
#include "ontovsm/ontology.hpp"
#include "ontovsm/termspace.hpp"
#include "ontovsm/text.hpp"

namespace ontovsm {

// Vector spaces served by the index. The first five hold the native terms of
// each TermKind; kKeyword counts only tokens outside entity spans. kBaseline
// is the plain keyword space over every token of the text, as a keyword-only
// engine sees it. kUnified is the single generalized space: the five native
// spaces side by side.
enum class Space : std::uint8_t {
  kName = 0,
  kClass = 1,
  kNameClass = 2,
  kIdentifier = 3,
  kKeyword = 4,
  kBaseline = 5,
  kUnified = 6,
};

inline constexpr int kNumStoredSpaces = 6;  // everything but kUnified
inline constexpr int kNumSpaces = 7;

std::string_view space_name(Space s);  // N, C, NC, I, KW, BASE, UNIFIED
Space parse_space(std::string_view s);  // throws kInvalidArgument
inline constexpr Space native_space(TermKind k) { return static_cast<Space>(k); }

using DocNo = std::uint32_t;
using TermId = std::uint32_t;

struct Posting {
  DocNo doc;
  std::uint32_t tf;

  friend bool operator==(const Posting&, const Posting&) = default;
};

struct WeightedTerm {
  TermId term;
  double weight;

  friend bool operator==(const WeightedTerm&, const WeightedTerm&) = default;
};

// Sorted by term id, weights strictly positive.
using SparseVector = std::vector<WeightedTerm>;

double dot(const SparseVector& a, const SparseVector& b);
double norm(const SparseVector& v);

struct IndexConfig {
  Tokenizer tokenizer;
};

// Per-space posting lists and tf.idf document vectors. Immutable once built;
// documents are numbered in ascending doc_id order, so posting lists sorted
// by DocNo are also sorted by doc_id.
//
// tf is the raw count after alias and subclass expansion;
// idf(t) = ln(1 + N / df(t)).
class InvertedIndex {
 public:
  // Throws kEmptyCorpus or kDuplicateDocument, and propagates KB errors.
  static InvertedIndex build(const std::vector<AnnotatedDocument>& corpus,
                             const KnowledgeBase& kb, const ClassTaxonomy& taxonomy,
                             const IndexConfig& config = {});

  std::size_t num_docs() const { return doc_ids_.size(); }
  const std::string& doc_id(DocNo doc) const { return doc_ids_.at(doc); }
  std::optional<DocNo> find_doc(std::string_view doc_id) const;

  std::size_t num_terms() const { return terms_.size(); }
  const GeneralizedTerm& term(TermId id) const { return terms_.at(id); }
  std::optional<TermId> find_term(const GeneralizedTerm& t) const;

  // Postings of the term in the given space; kUnified means the term's
  // native space. Empty when the term does not live in that space.
  std::span<const Posting> postings(TermId id, Space space) const;
  std::uint32_t df(TermId id, Space space) const {
    return static_cast<std::uint32_t>(postings(id, space).size());
  }
  double idf(TermId id, Space space) const;

  // Throws kUnknownDocument for an unknown doc_id.
  const SparseVector& doc_vector(DocNo doc, Space space) const;
  double doc_norm(DocNo doc, Space space) const;

  // Distinct terms with df >= 1 in the space.
  std::size_t term_count(Space space) const;

  const Tokenizer& tokenizer() const { return tokenizer_; }

  // Writes meta.json, terms.tsv, postings.tsv and vectors.tsv into dir.
  void save(const std::filesystem::path& dir) const;
  // Throws kIo or kParse.
  static InvertedIndex load(const std::filesystem::path& dir);

  // "<serialized-term> df=<n> postings=<doc ids>", one line per term with
  // postings in the space, in term order.
  void dump(std::ostream& out, Space space) const;

  friend bool operator==(const InvertedIndex&, const InvertedIndex&) = default;

 private:
  struct DocEntry {
    std::array<SparseVector, kNumSpaces> vectors;
    std::array<double, kNumSpaces> norms{};

    friend bool operator==(const DocEntry&, const DocEntry&) = default;
  };

  // Fills idf_ and every document's vectors from the posting lists.
  void compute_weights();

  std::vector<std::string> doc_ids_;
  std::vector<GeneralizedTerm> terms_;  // sorted, so TermId order = term order
  std::vector<std::vector<Posting>> native_postings_;    // by TermId
  std::vector<std::vector<Posting>> baseline_postings_;  // by TermId, keywords only
  std::vector<double> native_idf_;
  std::vector<double> baseline_idf_;
  std::vector<DocEntry> docs_;
  Tokenizer tokenizer_;
};

// Free-function forms of the index queries, keyed by public identifiers.
inline InvertedIndex build_index(const std::vector<AnnotatedDocument>& corpus,
                                 const KnowledgeBase& kb, const ClassTaxonomy& taxonomy,
                                 const IndexConfig& config = {}) {
  return InvertedIndex::build(corpus, kb, taxonomy, config);
}

// idf in the term's native space; 0 for unseen terms.
double idf(const InvertedIndex& ix, const GeneralizedTerm& term);

// Throws kUnknownDocument.
const SparseVector& doc_vector(const InvertedIndex& ix, std::string_view doc_id, Space space);

// Documents containing the term in its native space, ascending.
std::vector<std::string> postings(const InvertedIndex& ix, const GeneralizedTerm& term);

}  // namespace ontovsm

#endif  // ONTOVSM_INDEX_HPP_
