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

#include "ontovsm/retrieval.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

#include "ontovsm/error.hpp"
#include "ontovsm/termspace.hpp"

namespace ontovsm {

namespace {

constexpr std::array<std::string_view, 8> kModelNames = {
    "kw", "ne-o", "ne-n", "kw-and-ne-o", "kw-and-ne-n", "kw-or-ne-o", "kw-or-ne-n", "kw-plus-ne"};

constexpr std::array<Space, 4> kEntitySpaces = {Space::kName, Space::kClass,
                                                Space::kNameClass, Space::kIdentifier};

std::size_t slot(Space s) { return static_cast<std::size_t>(s); }

std::vector<DocNo> set_intersection(const std::vector<DocNo>& a, const std::vector<DocNo>& b) {
  std::vector<DocNo> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<DocNo> set_union(const std::vector<DocNo>& a, const std::vector<DocNo>& b) {
  std::vector<DocNo> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::string_view model_name(ModelKind m) { return kModelNames[static_cast<std::size_t>(m)]; }

ModelKind parse_model(std::string_view name) {
  for (std::size_t i = 0; i < kModelNames.size(); ++i) {
    if (kModelNames[i] == name) return static_cast<ModelKind>(i);
  }
  throw Error(ErrorCode::kUnknownModel, "unknown model '" + std::string(name) + "'");
}

bool uses_overlapped_terms(ModelKind m) {
  return m == ModelKind::kEntityOverlapped || m == ModelKind::kKeywordAndEntityOverlapped ||
         m == ModelKind::kKeywordOrEntityOverlapped;
}

bool uses_entity_sum(ModelKind m) {
  return m != ModelKind::kKeyword && m != ModelKind::kUnified;
}

bool uses_keyword_mix(ModelKind m) {
  return uses_entity_sum(m) && m != ModelKind::kEntityOverlapped &&
         m != ModelKind::kEntityNonOverlapped;
}

void ModelConfig::validate() const {
  const double weights[] = {w_name, w_class, w_name_class, w_identifier};
  double sum = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) {
      throw Error(ErrorCode::kInvalidConfig, "space weights must be finite and non-negative");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw Error(ErrorCode::kInvalidConfig,
                "space weights must sum to 1, got " + std::to_string(sum));
  }
  if (!std::isfinite(alpha) || alpha < 0.0 || alpha > 1.0) {
    throw Error(ErrorCode::kInvalidConfig, "alpha must lie in [0, 1]");
  }
}

PreparedQuery::PreparedQuery(const InvertedIndex& ix, const Query& q, ModelKind model)
    : ix_(ix), model_(model) {
  TermSet keywords;
  for (const auto& k : q.keywords) keywords.insert(GeneralizedTerm::keyword(k));

  if (model == ModelKind::kKeyword) {
    add_terms(Space::kBaseline, keywords);
  } else if (model == ModelKind::kUnified) {
    TermSet unified;
    for (const auto& [t, _] : unified_terms_query(q)) unified.insert(t);
    add_terms(Space::kUnified, unified);
  } else {
    const bool overlapped = uses_overlapped_terms(model);
    for (const auto& a : q.annotations) {
      TermSet terms = overlapped ? query_terms_overlapped(a) : query_terms_nonoverlapped(a);
      for (const auto& t : terms) add_terms(native_space(t.kind()), {t});
    }
    if (uses_keyword_mix(model)) add_terms(Space::kKeyword, keywords);
  }

  bool usable = false;
  for (const auto& s : spaces_) usable = usable || s.has_terms;
  if (!usable) {
    throw Error(ErrorCode::kEmptyQuery, "query '" + q.query_id + "' has no terms usable by model " +
                                            std::string(model_name(model)));
  }

  for (std::size_t s = 0; s < spaces_.size(); ++s) {
    auto& sq = spaces_[s];
    std::sort(sq.terms.begin(), sq.terms.end());
    sq.terms.erase(std::unique(sq.terms.begin(), sq.terms.end()), sq.terms.end());
    for (TermId id : sq.terms) sq.vector.push_back({id, ix_.idf(id, static_cast<Space>(s))});
    sq.norm = norm(sq.vector);
  }
}

void PreparedQuery::add_terms(Space space, const TermSet& terms) {
  auto& sq = spaces_[slot(space)];
  for (const auto& t : terms) {
    sq.has_terms = true;
    auto id = ix_.find_term(t);
    if (id && ix_.df(*id, space) > 0) sq.terms.push_back(*id);
  }
}

std::vector<DocNo> PreparedQuery::union_postings(Space space) const {
  std::vector<DocNo> out;
  for (TermId id : spaces_[slot(space)].terms) {
    for (const auto& p : ix_.postings(id, space)) out.push_back(p.doc);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool PreparedQuery::has_entity_terms() const {
  return std::any_of(kEntitySpaces.begin(), kEntitySpaces.end(),
                     [&](Space s) { return spaces_[slot(s)].has_terms; });
}

std::vector<DocNo> PreparedQuery::entity_filter() const {
  const bool overlapped = uses_overlapped_terms(model_);
  std::vector<DocNo> result;
  bool first = true;
  for (Space s : kEntitySpaces) {
    // A space the query says nothing about puts no constraint on documents.
    if (!spaces_[slot(s)].has_terms) continue;
    auto docs = union_postings(s);
    if (first) {
      result = std::move(docs);
      first = false;
    } else {
      result = overlapped ? set_intersection(result, docs) : set_union(result, docs);
    }
  }
  return result;
}

std::vector<DocNo> PreparedQuery::filter() const {
  switch (model_) {
    case ModelKind::kKeyword:
      return union_postings(Space::kBaseline);
    case ModelKind::kUnified:
      return union_postings(Space::kUnified);
    case ModelKind::kEntityOverlapped:
    case ModelKind::kEntityNonOverlapped:
      return entity_filter();
    case ModelKind::kKeywordAndEntityOverlapped:
    case ModelKind::kKeywordAndEntityNonOverlapped:
    case ModelKind::kKeywordOrEntityOverlapped:
    case ModelKind::kKeywordOrEntityNonOverlapped: {
      const bool has_kw = spaces_[slot(Space::kKeyword)].has_terms;
      const bool has_ne = has_entity_terms();
      if (!has_ne) return union_postings(Space::kKeyword);
      if (!has_kw) return entity_filter();
      const bool conjunctive = model_ == ModelKind::kKeywordAndEntityOverlapped ||
                               model_ == ModelKind::kKeywordAndEntityNonOverlapped;
      auto kw = union_postings(Space::kKeyword);
      auto ne = entity_filter();
      return conjunctive ? set_intersection(kw, ne) : set_union(kw, ne);
    }
  }
  return {};
}

double PreparedQuery::cosine(DocNo doc, Space space) const {
  const auto& sq = spaces_[slot(space)];
  const double dn = ix_.doc_norm(doc, space);
  if (sq.norm == 0.0 || dn == 0.0) return 0.0;
  return dot(ix_.doc_vector(doc, space), sq.vector) / (dn * sq.norm);
}

double PreparedQuery::score(DocNo doc, const ModelConfig& cfg) const {
  double s = 0.0;
  if (model_ == ModelKind::kKeyword) {
    s = cosine(doc, Space::kBaseline);
  } else if (model_ == ModelKind::kUnified) {
    s = cosine(doc, Space::kUnified);
  } else {
    s = cfg.w_name * cosine(doc, Space::kName) + cfg.w_class * cosine(doc, Space::kClass) +
        cfg.w_name_class * cosine(doc, Space::kNameClass) +
        cfg.w_identifier * cosine(doc, Space::kIdentifier);
    if (uses_keyword_mix(model_)) {
      s = cfg.alpha * s + (1.0 - cfg.alpha) * cosine(doc, Space::kKeyword);
    }
  }
  return std::clamp(s, 0.0, 1.0);
}

std::vector<std::string> filter(const InvertedIndex& ix, const Query& q, ModelKind model) {
  std::vector<std::string> out;
  for (DocNo d : PreparedQuery(ix, q, model).filter()) out.push_back(ix.doc_id(d));
  return out;
}

double score(const InvertedIndex& ix, std::string_view doc_id, const Query& q, ModelKind model,
             const ModelConfig& cfg) {
  cfg.validate();
  auto doc = ix.find_doc(doc_id);
  if (!doc) {
    throw Error(ErrorCode::kUnknownDocument, "unknown doc_id '" + std::string(doc_id) + "'");
  }
  return PreparedQuery(ix, q, model).score(*doc, cfg);
}

RankedResult search(const InvertedIndex& ix, const Query& q, ModelKind model,
                    const ModelConfig& cfg, std::size_t k) {
  cfg.validate();
  PreparedQuery prepared(ix, q, model);
  std::vector<std::pair<double, DocNo>> scored;
  for (DocNo d : prepared.filter()) scored.emplace_back(prepared.score(d, cfg), d);
  // DocNo order is doc_id order, so ties fall back to ascending doc_id.
  std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  if (scored.size() > k) scored.resize(k);

  RankedResult result{q.query_id, model, {}};
  result.results.reserve(scored.size());
  for (const auto& [s, d] : scored) result.results.push_back({ix.doc_id(d), s});
  return result;
}

}  // namespace ontovsm
