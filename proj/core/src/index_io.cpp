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

// On-disk index layout. Every file is plain UTF-8 text written in a fixed
// order, so the same corpus always yields byte-identical files.
//
//   meta.json     format tag, version, document ids, stopwords, counts
//   terms.tsv     <term_id> TAB <serialized term>
//   postings.tsv  <space> TAB <term_id> TAB <df> TAB <doc_no>:<tf>,...
//   vectors.tsv   <doc_id> TAB <space> TAB <term_id>:<weight>,...
//
// Weights are written in shortest round-trip form. They are recomputed from
// the postings on load and checked against vectors.tsv.

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "json.hpp"
#include "ontovsm/error.hpp"
#include "ontovsm/index.hpp"

namespace ontovsm {

namespace {

constexpr std::string_view kFormatTag = "ontovsm-index";
constexpr int kFormatVersion = 1;

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

template <typename T>
T parse_number(std::string_view s, const std::string& where) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::kParse, where + ": bad number '" + std::string(s) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::ofstream open_out(const std::filesystem::path& p) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + p.string());
  return out;
}

std::ifstream open_in(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + p.string());
  return in;
}

std::string serialize_vector(const SparseVector& v) {
  std::string line;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) line += ',';
    line += std::to_string(v[i].term);
    line += ':';
    line += format_double(v[i].weight);
  }
  return line;
}

}  // namespace

void InvertedIndex::save(const std::filesystem::path& dir) const {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create " + dir.string() + ": " + ec.message());

  nlohmann::ordered_json meta;
  meta["format"] = kFormatTag;
  meta["version"] = kFormatVersion;
  meta["num_docs"] = doc_ids_.size();
  meta["num_terms"] = terms_.size();
  meta["idf"] = "ln(1 + N/df)";
  meta["stopwords"] = tokenizer_.stopwords();
  meta["docs"] = doc_ids_;
  open_out(dir / "meta.json") << meta.dump(2) << '\n';

  auto terms = open_out(dir / "terms.tsv");
  for (TermId id = 0; id < terms_.size(); ++id) {
    terms << id << '\t' << terms_[id].to_string() << '\n';
  }

  auto post = open_out(dir / "postings.tsv");
  auto write_lists = [&](const std::vector<std::vector<Posting>>& lists, bool baseline) {
    for (TermId id = 0; id < lists.size(); ++id) {
      if (lists[id].empty()) continue;
      // Native postings carry their term's own space tag.
      const Space space = baseline ? Space::kBaseline : native_space(terms_[id].kind());
      post << space_name(space) << '\t' << id << '\t' << lists[id].size() << '\t';
      for (std::size_t i = 0; i < lists[id].size(); ++i) {
        if (i > 0) post << ',';
        post << lists[id][i].doc << ':' << lists[id][i].tf;
      }
      post << '\n';
    }
  };
  write_lists(native_postings_, false);
  write_lists(baseline_postings_, true);

  auto vec = open_out(dir / "vectors.tsv");
  for (DocNo d = 0; d < docs_.size(); ++d) {
    for (int s = 0; s < kNumStoredSpaces; ++s) {
      const auto& v = docs_[d].vectors[s];
      if (v.empty()) continue;
      vec << doc_ids_[d] << '\t' << space_name(static_cast<Space>(s)) << '\t'
          << serialize_vector(v) << '\n';
    }
  }
  if (!vec) throw Error(ErrorCode::kIo, "write failed in " + dir.string());
}

InvertedIndex InvertedIndex::load(const std::filesystem::path& dir) {
  InvertedIndex ix;

  std::size_t num_terms = 0;
  try {
    nlohmann::json meta;
    auto in = open_in(dir / "meta.json");
    meta = nlohmann::json::parse(in);
    if (meta.at("format").get<std::string>() != kFormatTag) {
      throw Error(ErrorCode::kParse, "meta.json: not an ontovsm index");
    }
    if (meta.at("version").get<int>() != kFormatVersion) {
      throw Error(ErrorCode::kParse, "meta.json: unsupported index version " +
                                         meta.at("version").dump());
    }
    ix.doc_ids_ = meta.at("docs").get<std::vector<std::string>>();
    ix.tokenizer_ = Tokenizer(meta.at("stopwords").get<std::set<std::string>>());
    if (meta.at("num_docs").get<std::size_t>() != ix.doc_ids_.size()) {
      throw Error(ErrorCode::kParse, "meta.json: num_docs disagrees with docs");
    }
    num_terms = meta.at("num_terms").get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("meta.json: ") + e.what());
  }
  if (!std::is_sorted(ix.doc_ids_.begin(), ix.doc_ids_.end()) || ix.doc_ids_.empty()) {
    throw Error(ErrorCode::kParse, "meta.json: document ids must be non-empty and sorted");
  }

  std::string line;
  {
    auto in = open_in(dir / "terms.tsv");
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const std::string where = "terms.tsv:" + std::to_string(lineno);
      auto tab = line.find('\t');
      if (tab == std::string::npos) throw Error(ErrorCode::kParse, where + ": missing tab");
      auto id = parse_number<TermId>(std::string_view(line).substr(0, tab), where);
      if (id != ix.terms_.size()) throw Error(ErrorCode::kParse, where + ": ids not dense");
      ix.terms_.push_back(GeneralizedTerm::parse(std::string_view(line).substr(tab + 1)));
    }
    if (num_terms != ix.terms_.size() ||
        !std::is_sorted(ix.terms_.begin(), ix.terms_.end())) {
      throw Error(ErrorCode::kParse, "terms.tsv: term dictionary is inconsistent");
    }
  }

  ix.native_postings_.resize(ix.terms_.size());
  ix.baseline_postings_.resize(ix.terms_.size());
  {
    auto in = open_in(dir / "postings.tsv");
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const std::string where = "postings.tsv:" + std::to_string(lineno);
      auto fields = split(line, '\t');
      if (fields.size() != 4) throw Error(ErrorCode::kParse, where + ": expected 4 fields");
      const Space space = parse_space(fields[0]);
      const auto id = parse_number<TermId>(fields[1], where);
      const auto df = parse_number<std::size_t>(fields[2], where);
      if (id >= ix.terms_.size()) throw Error(ErrorCode::kParse, where + ": term id out of range");
      auto& list = space == Space::kBaseline ? ix.baseline_postings_[id]
                                             : ix.native_postings_[id];
      if (space != Space::kBaseline && space != native_space(ix.terms_[id].kind())) {
        throw Error(ErrorCode::kParse, where + ": term in the wrong space");
      }
      for (auto entry : split(fields[3], ',')) {
        auto colon = entry.find(':');
        if (colon == std::string_view::npos) throw Error(ErrorCode::kParse, where + ": bad posting");
        Posting p{parse_number<DocNo>(entry.substr(0, colon), where),
                  parse_number<std::uint32_t>(entry.substr(colon + 1), where)};
        if (p.doc >= ix.doc_ids_.size() || p.tf == 0 ||
            (!list.empty() && list.back().doc >= p.doc)) {
          throw Error(ErrorCode::kParse, where + ": invalid posting list");
        }
        list.push_back(p);
      }
      if (list.size() != df) throw Error(ErrorCode::kParse, where + ": df mismatch");
    }
  }
  ix.compute_weights();

  // The stored vectors must agree exactly with the recomputed ones.
  {
    auto in = open_in(dir / "vectors.tsv");
    std::ostringstream expected;
    for (DocNo d = 0; d < ix.docs_.size(); ++d) {
      for (int s = 0; s < kNumStoredSpaces; ++s) {
        const auto& v = ix.docs_[d].vectors[s];
        if (v.empty()) continue;
        expected << ix.doc_ids_[d] << '\t' << space_name(static_cast<Space>(s)) << '\t'
                 << serialize_vector(v) << '\n';
      }
    }
    std::ostringstream actual;
    actual << in.rdbuf();
    if (actual.str() != expected.str()) {
      throw Error(ErrorCode::kParse, "vectors.tsv does not match the posting lists");
    }
  }
  return ix;
}

}  // namespace ontovsm
