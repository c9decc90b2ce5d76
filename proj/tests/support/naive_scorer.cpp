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

#include "naive_scorer.hpp"

#include <cctype>
#include <cmath>
#include <deque>
#include <optional>

namespace ontovsm::testing {

namespace {

const std::vector<std::string> kEntitySpaces = {"N", "C", "NC", "I"};

bool word_char(unsigned char c) { return std::isalnum(c) || c >= 0x80; }

std::set<std::string> set_and(const std::set<std::string>& a, const std::set<std::string>& b) {
  std::set<std::string> out;
  for (const auto& x : a) {
    if (b.count(x)) out.insert(x);
  }
  return out;
}

std::set<std::string> set_or(std::set<std::string> a, const std::set<std::string>& b) {
  a.insert(b.begin(), b.end());
  return a;
}

}  // namespace

std::string NaiveScorer::lower(const std::string& s) {
  std::string out = s;
  for (auto& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c + 32);
  }
  return out;
}

std::vector<std::string> NaiveScorer::words(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (unsigned char c : text) {
    if (word_char(c)) {
      cur += static_cast<char>(c);
    } else if (!cur.empty()) {
      out.push_back(lower(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(lower(cur));
  return out;
}

std::set<std::string> NaiveScorer::ancestors(const std::string& cls) const {
  std::set<std::string> seen{cls};
  std::deque<std::string> todo{cls};
  while (!todo.empty()) {
    auto c = todo.front();
    todo.pop_front();
    for (const auto& p : parents_.at(c)) {
      if (seen.insert(p).second) todo.push_back(p);
    }
  }
  return seen;
}

NaiveScorer::NaiveScorer(std::vector<DocumentRecord> docs,
                         const std::vector<ClassDecl>& classes,
                         const std::vector<EntityRecord>& entities) {
  for (const auto& c : classes) parents_[c.id] = c.parents;
  for (const auto& e : entities) entities_[e.id] = e;

  for (const auto& r : docs) {
    Doc d;
    // Every token, and separately the tokens that touch no annotation span.
    std::size_t i = 0;
    while (i < r.text.size()) {
      if (!word_char(static_cast<unsigned char>(r.text[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < r.text.size() && word_char(static_cast<unsigned char>(r.text[j]))) ++j;
      const std::string w = lower(r.text.substr(i, j - i));
      d.spaces["BASE"]["K:" + w] += 1;
      bool inside = false;
      for (const auto& a : r.annotations) {
        if (a.span->start < j && i < a.span->end) inside = true;
      }
      if (!inside) d.spaces["KW"]["K:" + w] += 1;
      i = j;
    }
    for (const auto& a : r.annotations) {
      std::vector<std::string> names;
      std::string cls;
      if (a.entity_id) {
        const auto& e = entities_.at(*a.entity_id);
        names = e.names;
        cls = e.cls;
        d.spaces["I"]["I:" + e.id] += 1;
      } else if (a.name) {
        names = {*a.name};
      }
      if (a.class_id) cls = *a.class_id;
      for (const auto& n : names) d.spaces["N"]["N:" + lower(n)] += 1;
      if (!cls.empty()) {
        for (const auto& c : ancestors(cls)) {
          d.spaces["C"]["C:" + c] += 1;
          for (const auto& n : names) d.spaces["NC"]["NC:" + lower(n) + "/" + c] += 1;
        }
      }
    }
    for (const char* s : {"N", "C", "NC", "I", "KW"}) {
      for (const auto& [t, n] : d.spaces[s]) d.spaces["U"][t] += n;
    }
    docs_[r.doc_id] = std::move(d);
  }
}

double NaiveScorer::tf(const std::string& doc_id, const std::string& space,
                       const std::string& term) const {
  const auto& spaces = docs_.at(doc_id).spaces;
  auto s = spaces.find(space);
  if (s == spaces.end()) return 0.0;
  auto t = s->second.find(term);
  return t == s->second.end() ? 0.0 : t->second;
}

int NaiveScorer::df(const std::string& space, const std::string& term) const {
  int n = 0;
  for (const auto& [id, _] : docs_) n += tf(id, space, term) > 0 ? 1 : 0;
  return n;
}

double NaiveScorer::idf(const std::string& space, const std::string& term) const {
  const int d = df(space, term);
  if (d == 0) return 0.0;
  return std::log(1.0 + static_cast<double>(docs_.size()) / d);
}

double NaiveScorer::weight(const std::string& doc_id, const std::string& space,
                           const std::string& term) const {
  return tf(doc_id, space, term) * idf(space, term);
}

std::map<std::string, std::set<std::string>> NaiveScorer::query_terms(
    const QueryRecord& q, const std::string& model) const {
  std::map<std::string, std::set<std::string>> terms;
  std::set<std::string> keywords;
  for (const auto& k : q.keywords) {
    for (const auto& w : words(k)) keywords.insert("K:" + w);
  }
  const bool overlapped = model.size() >= 2 && model.substr(model.size() - 2) == "-o";
  std::set<std::string> most_specific;
  for (auto a : q.entities) {
    if (a.entity_id) {
      const auto& e = entities_.at(*a.entity_id);
      if (!a.name) a.name = e.names.front();
      if (!a.class_id) a.class_id = e.cls;
    }
    std::string narrowest;
    if (a.entity_id) {
      narrowest = "I:" + *a.entity_id;
    } else if (a.name && a.class_id) {
      narrowest = "NC:" + lower(*a.name) + "/" + *a.class_id;
    } else if (a.class_id) {
      narrowest = "C:" + *a.class_id;
    } else {
      narrowest = "N:" + lower(*a.name);
    }
    most_specific.insert(narrowest);
    if (model == "kw" || model == "kw-plus-ne") continue;
    if (overlapped) {
      if (a.name) terms["N"].insert("N:" + lower(*a.name));
      if (a.class_id) terms["C"].insert("C:" + *a.class_id);
      if (a.name && a.class_id) terms["NC"].insert("NC:" + lower(*a.name) + "/" + *a.class_id);
      if (a.entity_id) terms["I"].insert("I:" + *a.entity_id);
    } else {
      terms[narrowest.substr(0, narrowest.find(':'))].insert(narrowest);
    }
  }
  if (model == "kw") {
    if (!keywords.empty()) terms["BASE"] = keywords;
  } else if (model == "kw-plus-ne") {
    auto all = set_or(keywords, most_specific);
    if (!all.empty()) terms["U"] = all;
  } else if (model.rfind("kw-", 0) == 0) {
    if (!keywords.empty()) terms["KW"] = keywords;
  }
  return terms;
}

std::set<std::string> NaiveScorer::docs_with_any(const std::string& space,
                                                 const std::set<std::string>& terms) const {
  std::set<std::string> out;
  for (const auto& [id, _] : docs_) {
    for (const auto& t : terms) {
      if (tf(id, space, t) > 0) out.insert(id);
    }
  }
  return out;
}

std::set<std::string> NaiveScorer::filter(const QueryRecord& q, const std::string& model) const {
  auto terms = query_terms(q, model);
  if (model == "kw") return terms.count("BASE") ? docs_with_any("BASE", terms["BASE"]) : std::set<std::string>{};
  if (model == "kw-plus-ne") return terms.count("U") ? docs_with_any("U", terms["U"]) : std::set<std::string>{};

  const bool overlapped = model.substr(model.size() - 2) == "-o";
  std::optional<std::set<std::string>> ne;
  for (const auto& s : kEntitySpaces) {
    if (!terms.count(s)) continue;
    auto d = docs_with_any(s, terms[s]);
    if (!ne) {
      ne = d;
    } else {
      ne = overlapped ? set_and(*ne, d) : set_or(*ne, d);
    }
  }
  if (model == "ne-o" || model == "ne-n") return ne.value_or(std::set<std::string>{});

  std::optional<std::set<std::string>> kw;
  if (terms.count("KW")) kw = docs_with_any("KW", terms["KW"]);
  if (!kw) return ne.value_or(std::set<std::string>{});
  if (!ne) return *kw;
  return model.rfind("kw-and-", 0) == 0 ? set_and(*kw, *ne) : set_or(*kw, *ne);
}

double NaiveScorer::cosine(const std::string& doc_id, const std::string& space,
                           const std::set<std::string>& query) const {
  double dot = 0.0;
  double qq = 0.0;
  for (const auto& t : query) {
    const double qw = idf(space, t);
    qq += qw * qw;
    dot += qw * weight(doc_id, space, t);
  }
  double dd = 0.0;
  const auto& spaces = docs_.at(doc_id).spaces;
  if (auto s = spaces.find(space); s != spaces.end()) {
    for (const auto& [t, _] : s->second) {
      const double w = weight(doc_id, space, t);
      dd += w * w;
    }
  }
  if (qq == 0.0 || dd == 0.0) return 0.0;
  return dot / (std::sqrt(dd) * std::sqrt(qq));
}

double NaiveScorer::score(const std::string& doc_id, const QueryRecord& q,
                          const std::string& model, const std::vector<double>& weights,
                          double alpha) const {
  auto terms = query_terms(q, model);
  if (model == "kw") return cosine(doc_id, "BASE", terms["BASE"]);
  if (model == "kw-plus-ne") return cosine(doc_id, "U", terms["U"]);
  double ne = 0.0;
  for (std::size_t i = 0; i < kEntitySpaces.size(); ++i) {
    ne += weights[i] * cosine(doc_id, kEntitySpaces[i], terms[kEntitySpaces[i]]);
  }
  if (model == "ne-o" || model == "ne-n") return ne;
  return alpha * ne + (1.0 - alpha) * cosine(doc_id, "KW", terms["KW"]);
}

std::vector<std::string> NaiveScorer::doc_ids() const {
  std::vector<std::string> out;
  for (const auto& [id, _] : docs_) out.push_back(id);
  return out;
}

}  // namespace ontovsm::testing
