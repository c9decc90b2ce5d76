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

#include "ontovsm/index.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>

#include "ontovsm/error.hpp"

namespace ontovsm {

namespace {

constexpr std::array<std::string_view, kNumSpaces> kSpaceNames = {
    "N", "C", "NC", "I", "KW", "BASE", "UNIFIED"};

std::size_t slot(Space s) { return static_cast<std::size_t>(s); }

}  // namespace

std::string_view space_name(Space s) { return kSpaceNames[slot(s)]; }

Space parse_space(std::string_view s) {
  for (std::size_t i = 0; i < kSpaceNames.size(); ++i) {
    if (kSpaceNames[i] == s) return static_cast<Space>(i);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown space '" + std::string(s) + "'");
}

double dot(const SparseVector& a, const SparseVector& b) {
  double sum = 0.0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->term < j->term) {
      ++i;
    } else if (j->term < i->term) {
      ++j;
    } else {
      sum += i->weight * j->weight;
      ++i;
      ++j;
    }
  }
  return sum;
}

double norm(const SparseVector& v) {
  double sum = 0.0;
  for (const auto& e : v) sum += e.weight * e.weight;
  return std::sqrt(sum);
}

InvertedIndex InvertedIndex::build(const std::vector<AnnotatedDocument>& corpus,
                                   const KnowledgeBase& kb, const ClassTaxonomy& taxonomy,
                                   const IndexConfig& config) {
  if (corpus.empty()) throw Error(ErrorCode::kEmptyCorpus, "cannot index an empty corpus");
  check_unique_ids(corpus);

  std::vector<const AnnotatedDocument*> docs;
  docs.reserve(corpus.size());
  for (const auto& d : corpus) docs.push_back(&d);
  std::sort(docs.begin(), docs.end(),
            [](const auto* a, const auto* b) { return a->doc_id < b->doc_id; });

  std::vector<TermMultiset> native(docs.size());
  std::vector<std::map<std::string, std::uint32_t>> baseline(docs.size());
  std::set<GeneralizedTerm> vocabulary;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    native[i] = unified_terms_doc(*docs[i], kb, taxonomy);
    for (auto& tok : config.tokenizer.tokenize(docs[i]->text)) ++baseline[i][std::move(tok)];
    for (const auto& [t, _] : native[i]) vocabulary.insert(t);
    for (const auto& [k, _] : baseline[i]) vocabulary.insert(GeneralizedTerm::keyword(k));
  }

  InvertedIndex ix;
  ix.tokenizer_ = config.tokenizer;
  ix.terms_.assign(vocabulary.begin(), vocabulary.end());
  ix.native_postings_.resize(ix.terms_.size());
  ix.baseline_postings_.resize(ix.terms_.size());
  for (std::size_t i = 0; i < docs.size(); ++i) {
    const auto doc = static_cast<DocNo>(i);
    ix.doc_ids_.push_back(docs[i]->doc_id);
    for (const auto& [t, tf] : native[i]) {
      ix.native_postings_[*ix.find_term(t)].push_back({doc, tf});
    }
    for (const auto& [k, tf] : baseline[i]) {
      ix.baseline_postings_[*ix.find_term(GeneralizedTerm::keyword(k))].push_back({doc, tf});
    }
  }
  ix.compute_weights();
  return ix;
}

void InvertedIndex::compute_weights() {
  const double n = static_cast<double>(doc_ids_.size());
  auto idf_of = [n](std::size_t df) {
    return df == 0 ? 0.0 : std::log(1.0 + n / static_cast<double>(df));
  };

  native_idf_.assign(terms_.size(), 0.0);
  baseline_idf_.assign(terms_.size(), 0.0);
  docs_.assign(doc_ids_.size(), DocEntry{});
  for (TermId id = 0; id < terms_.size(); ++id) {
    native_idf_[id] = idf_of(native_postings_[id].size());
    baseline_idf_[id] = idf_of(baseline_postings_[id].size());
    const auto space = slot(native_space(terms_[id].kind()));
    for (const auto& p : native_postings_[id]) {
      docs_[p.doc].vectors[space].push_back({id, p.tf * native_idf_[id]});
    }
    for (const auto& p : baseline_postings_[id]) {
      docs_[p.doc].vectors[slot(Space::kBaseline)].push_back({id, p.tf * baseline_idf_[id]});
    }
  }
  // Term ids are ordered by kind first, so concatenating the native spaces in
  // kind order keeps the unified vector sorted.
  for (auto& d : docs_) {
    auto& unified = d.vectors[slot(Space::kUnified)];
    for (int k = 0; k < kNumTermKinds; ++k) {
      unified.insert(unified.end(), d.vectors[k].begin(), d.vectors[k].end());
    }
    for (int s = 0; s < kNumSpaces; ++s) d.norms[s] = norm(d.vectors[s]);
  }
}

std::optional<DocNo> InvertedIndex::find_doc(std::string_view doc_id) const {
  auto it = std::lower_bound(doc_ids_.begin(), doc_ids_.end(), doc_id);
  if (it == doc_ids_.end() || *it != doc_id) return std::nullopt;
  return static_cast<DocNo>(it - doc_ids_.begin());
}

std::optional<TermId> InvertedIndex::find_term(const GeneralizedTerm& t) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), t);
  if (it == terms_.end() || *it != t) return std::nullopt;
  return static_cast<TermId>(it - terms_.begin());
}

std::span<const Posting> InvertedIndex::postings(TermId id, Space space) const {
  if (space == Space::kBaseline) return baseline_postings_.at(id);
  if (space == Space::kUnified || native_space(terms_.at(id).kind()) == space) {
    return native_postings_.at(id);
  }
  return {};
}

double InvertedIndex::idf(TermId id, Space space) const {
  if (space == Space::kBaseline) return baseline_idf_.at(id);
  if (space == Space::kUnified || native_space(terms_.at(id).kind()) == space) {
    return native_idf_.at(id);
  }
  return 0.0;
}

const SparseVector& InvertedIndex::doc_vector(DocNo doc, Space space) const {
  if (doc >= docs_.size()) {
    throw Error(ErrorCode::kUnknownDocument, "document number out of range");
  }
  return docs_[doc].vectors[slot(space)];
}

double InvertedIndex::doc_norm(DocNo doc, Space space) const {
  return docs_.at(doc).norms[slot(space)];
}

std::size_t InvertedIndex::term_count(Space space) const {
  std::size_t n = 0;
  for (TermId id = 0; id < terms_.size(); ++id) n += df(id, space) > 0 ? 1 : 0;
  return n;
}

void InvertedIndex::dump(std::ostream& out, Space space) const {
  for (TermId id = 0; id < terms_.size(); ++id) {
    auto list = postings(id, space);
    if (list.empty()) continue;
    out << terms_[id].to_string() << " df=" << list.size() << " postings=";
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (i > 0) out << ',';
      out << doc_ids_[list[i].doc];
    }
    out << '\n';
  }
}

double idf(const InvertedIndex& ix, const GeneralizedTerm& term) {
  auto id = ix.find_term(term);
  return id ? ix.idf(*id, native_space(term.kind())) : 0.0;
}

const SparseVector& doc_vector(const InvertedIndex& ix, std::string_view doc_id, Space space) {
  auto doc = ix.find_doc(doc_id);
  if (!doc) {
    throw Error(ErrorCode::kUnknownDocument, "unknown doc_id '" + std::string(doc_id) + "'");
  }
  return ix.doc_vector(*doc, space);
}

std::vector<std::string> postings(const InvertedIndex& ix, const GeneralizedTerm& term) {
  std::vector<std::string> out;
  if (auto id = ix.find_term(term)) {
    for (const auto& p : ix.postings(*id, native_space(term.kind()))) {
      out.push_back(ix.doc_id(p.doc));
    }
  }
  return out;
}

}  // namespace ontovsm
