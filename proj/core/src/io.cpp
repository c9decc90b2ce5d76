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

#include "ontovsm/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "ontovsm/error.hpp"

namespace ontovsm::io {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  return out;
}

bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

// Calls fn(parsed_json, line_number) for each non-blank line, prefixing any
// error with "<source>:<line>: ".
template <typename Fn>
void for_each_json_line(std::istream& in, const std::string& source, Fn&& fn) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank(line)) continue;
    const std::string where = source + ":" + std::to_string(lineno) + ": ";
    try {
      fn(json::parse(line), lineno);
    } catch (const Error& e) {
      throw Error(e.code(), where + e.what());
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kParse, where + e.what());
    }
  }
}

std::optional<std::string> optional_string(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return it->get<std::string>();
}

Annotation parse_annotation(const json& j, bool with_span) {
  if (!j.is_object()) throw Error(ErrorCode::kParse, "annotation must be an object");
  Annotation a;
  a.name = optional_string(j, "name");
  a.class_id = optional_string(j, "class");
  a.entity_id = optional_string(j, "id");
  if (with_span && (j.contains("start") || j.contains("end"))) {
    a.span = Span{j.at("start").get<std::size_t>(), j.at("end").get<std::size_t>()};
  }
  return a;
}

ordered_json annotation_json(const Annotation& a) {
  ordered_json j = ordered_json::object();
  if (a.span) {
    j["start"] = a.span->start;
    j["end"] = a.span->end;
  }
  if (a.name) j["name"] = *a.name;
  if (a.class_id) j["class"] = *a.class_id;
  if (a.entity_id) j["id"] = *a.entity_id;
  return j;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string f;
  while (ss >> f) out.push_back(f);
  return out;
}

std::string percent(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v * 100.0);
  return buf;
}

std::string table_csv(const EvalReport& report, bool precision) {
  std::string out = "model";
  for (int j = 0; j < kRecallLevels; ++j) out += "," + std::to_string(j * 10);
  out += '\n';
  for (const auto& m : report.models) {
    out += m.model;
    const auto& values = precision ? m.curve.precision : m.curve.f;
    for (double v : values) out += "," + percent(v);
    out += '\n';
  }
  return out;
}

}  // namespace

std::vector<ClassDecl> parse_taxonomy(std::istream& in, const std::string& source) {
  std::vector<ClassDecl> decls;
  for_each_json_line(in, source, [&](const json& j, std::size_t) {
    ClassDecl d;
    d.id = j.at("class").get<std::string>();
    if (auto it = j.find("parents"); it != j.end() && !it->is_null()) {
      d.parents = it->get<std::vector<std::string>>();
    }
    decls.push_back(std::move(d));
  });
  return decls;
}

ClassTaxonomy read_taxonomy(const std::filesystem::path& path) {
  auto in = open_in(path);
  auto decls = parse_taxonomy(in, path.string());
  try {
    return ClassTaxonomy::load(decls);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

void write_taxonomy(std::ostream& out, const ClassTaxonomy& taxonomy) {
  for (const auto& d : taxonomy.to_decls()) {
    ordered_json j;
    j["class"] = d.id;
    j["parents"] = d.parents;
    out << j.dump() << '\n';
  }
}

std::vector<EntityRecord> parse_kb(std::istream& in, const std::string& source) {
  std::vector<EntityRecord> records;
  for_each_json_line(in, source, [&](const json& j, std::size_t) {
    records.push_back({j.at("id").get<std::string>(), j.at("class").get<std::string>(),
                       j.at("names").get<std::vector<std::string>>()});
  });
  return records;
}

KnowledgeBase read_kb(const std::filesystem::path& path, const ClassTaxonomy& taxonomy) {
  auto in = open_in(path);
  auto records = parse_kb(in, path.string());
  try {
    return KnowledgeBase::load(std::move(records), taxonomy);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

void write_kb(std::ostream& out, const KnowledgeBase& kb) {
  for (const auto& e : kb.records()) {
    ordered_json j;
    j["id"] = e.id;
    j["class"] = e.cls;
    j["names"] = e.names;
    out << j.dump() << '\n';
  }
}

std::vector<DocumentRecord> parse_documents(std::istream& in, const std::string& source) {
  std::vector<DocumentRecord> records;
  for_each_json_line(in, source, [&](const json& j, std::size_t) {
    DocumentRecord r;
    r.doc_id = j.at("doc_id").get<std::string>();
    r.text = j.at("text").get<std::string>();
    if (auto it = j.find("annotations"); it != j.end() && !it->is_null()) {
      for (const auto& a : *it) r.annotations.push_back(parse_annotation(a, true));
    }
    records.push_back(std::move(r));
  });
  return records;
}

std::vector<DocumentRecord> read_documents(const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_documents(in, path.string());
}

std::vector<AnnotatedDocument> parse_corpus(std::istream& in, const std::string& source,
                                            const KnowledgeBase& kb,
                                            const ClassTaxonomy& taxonomy,
                                            const Tokenizer& tokenizer) {
  std::vector<AnnotatedDocument> docs;
  std::set<std::string> seen;
  for_each_json_line(in, source, [&](const json& j, std::size_t) {
    DocumentRecord r;
    r.doc_id = j.at("doc_id").get<std::string>();
    try {
      r.text = j.at("text").get<std::string>();
      if (auto it = j.find("annotations"); it != j.end() && !it->is_null()) {
        for (const auto& a : *it) r.annotations.push_back(parse_annotation(a, true));
      }
      if (!seen.insert(r.doc_id).second) {
        throw Error(ErrorCode::kDuplicateDocument, "duplicate doc_id");
      }
      docs.push_back(ingest_document(r, kb, taxonomy, tokenizer));
    } catch (const Error& e) {
      throw Error(e.code(), "doc '" + r.doc_id + "': " + e.what());
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kParse, "doc '" + r.doc_id + "': " + e.what());
    }
  });
  return docs;
}

std::vector<AnnotatedDocument> read_corpus(const std::filesystem::path& path,
                                           const KnowledgeBase& kb,
                                           const ClassTaxonomy& taxonomy,
                                           const Tokenizer& tokenizer) {
  auto in = open_in(path);
  return parse_corpus(in, path.string(), kb, taxonomy, tokenizer);
}

std::string document_to_json(const DocumentRecord& record) {
  ordered_json j;
  j["doc_id"] = record.doc_id;
  j["text"] = record.text;
  j["annotations"] = ordered_json::array();
  for (const auto& a : record.annotations) j["annotations"].push_back(annotation_json(a));
  return j.dump();
}

void write_documents(std::ostream& out, const std::vector<DocumentRecord>& records) {
  for (const auto& r : records) out << document_to_json(r) << '\n';
}

std::vector<Query> parse_queries(std::istream& in, const std::string& source,
                                 const KnowledgeBase& kb, const ClassTaxonomy& taxonomy,
                                 const Tokenizer& tokenizer) {
  std::vector<Query> queries;
  std::set<std::string> seen;
  for_each_json_line(in, source, [&](const json& j, std::size_t) {
    QueryRecord r;
    r.query_id = j.at("query_id").get<std::string>();
    if (auto it = j.find("keywords"); it != j.end() && !it->is_null()) {
      r.keywords = it->get<std::vector<std::string>>();
    }
    if (auto it = j.find("entities"); it != j.end() && !it->is_null()) {
      for (const auto& a : *it) r.entities.push_back(parse_annotation(a, false));
    }
    if (!seen.insert(r.query_id).second) {
      throw Error(ErrorCode::kParse, "duplicate query_id '" + r.query_id + "'");
    }
    queries.push_back(ingest_query(r, kb, taxonomy, tokenizer));
  });
  return queries;
}

std::vector<Query> read_queries(const std::filesystem::path& path, const KnowledgeBase& kb,
                                const ClassTaxonomy& taxonomy, const Tokenizer& tokenizer) {
  auto in = open_in(path);
  return parse_queries(in, path.string(), kb, taxonomy, tokenizer);
}

Qrels parse_qrels(std::istream& in, const std::string& source) {
  Qrels qrels;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank(line)) continue;
    const std::string where = source + ":" + std::to_string(lineno) + ": ";
    auto f = split_ws(line);
    if (f.size() != 4) throw Error(ErrorCode::kParse, where + "expected 4 fields");
    int rel = 0;
    try {
      std::size_t used = 0;
      rel = std::stoi(f[3], &used);
      if (used != f[3].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParse, where + "bad relevance value '" + f[3] + "'");
    }
    try {
      qrels.add(f[0], f[2], rel > 0);
    } catch (const Error& e) {
      throw Error(e.code(), where + e.what());
    }
  }
  return qrels;
}

Qrels read_qrels(const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_qrels(in, path.string());
}

void write_run(std::ostream& out, const RankedResult& result) {
  char score[64];
  for (std::size_t i = 0; i < result.results.size(); ++i) {
    std::snprintf(score, sizeof score, "%.6f", result.results[i].score);
    out << result.query_id << " Q0 " << result.results[i].doc_id << ' ' << (i + 1) << ' '
        << score << ' ' << model_name(result.model) << '\n';
  }
}

RunFile parse_run(std::istream& in, const std::string& source) {
  RunFile file;
  std::vector<std::string> order;
  std::map<std::string, std::vector<std::pair<long, std::string>>> ranked;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank(line)) continue;
    const std::string where = source + ":" + std::to_string(lineno) + ": ";
    auto f = split_ws(line);
    if (f.size() != 6) throw Error(ErrorCode::kParse, where + "expected 6 fields");
    long rank = 0;
    try {
      rank = std::stol(f[3]);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParse, where + "bad rank '" + f[3] + "'");
    }
    if (file.model.empty()) {
      file.model = f[5];
    } else if (file.model != f[5]) {
      throw Error(ErrorCode::kParse, where + "run mixes model tags '" + file.model +
                                         "' and '" + f[5] + "'");
    }
    auto [it, inserted] = ranked.try_emplace(f[0]);
    if (inserted) order.push_back(f[0]);
    it->second.emplace_back(rank, f[2]);
  }
  for (const auto& q : order) {
    auto& docs = ranked[q];
    std::stable_sort(docs.begin(), docs.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    Run r{q, {}};
    for (auto& [_, d] : docs) r.doc_ids.push_back(std::move(d));
    file.runs.push_back(std::move(r));
  }
  return file;
}

RunFile read_run(const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_run(in, path.string());
}

std::string precision_table_csv(const EvalReport& report) { return table_csv(report, true); }
std::string fmeasure_table_csv(const EvalReport& report) { return table_csv(report, false); }

std::string curve_csv(const ModelEvaluation& model) {
  std::string out;
  char buf[96];
  for (int j = 0; j < kRecallLevels; ++j) {
    std::snprintf(buf, sizeof buf, "%.1f,%.6f,%.6f\n", recall_level(j),
                  model.curve.precision[j], model.curve.f[j]);
    out += buf;
  }
  return out;
}

std::string format_report(const EvalReport& report) {
  std::size_t width = 5;
  for (const auto& m : report.models) width = std::max(width, m.model.size());
  auto block = [&](const char* title, bool precision) {
    std::string out = title;
    out += '\n';
    char buf[32];
    std::snprintf(buf, sizeof buf, "%-*s", static_cast<int>(width), "model");
    out += buf;
    for (int j = 0; j < kRecallLevels; ++j) {
      std::snprintf(buf, sizeof buf, " %7d", j * 10);
      out += buf;
    }
    out += '\n';
    for (const auto& m : report.models) {
      std::snprintf(buf, sizeof buf, "%-*s", static_cast<int>(width), m.model.c_str());
      out += buf;
      for (double v : precision ? m.curve.precision : m.curve.f) {
        std::snprintf(buf, sizeof buf, " %7.2f", v * 100.0);
        out += buf;
      }
      out += '\n';
    }
    return out;
  };
  return block("Average precision (%) at recall (%)", true) + "\n" +
         block("Average F-measure (%) at recall (%)", false);
}

void write_report(const EvalReport& report, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create " + dir.string() + ": " + ec.message());
  open_out(dir / "precision.csv") << precision_table_csv(report);
  open_out(dir / "fmeasure.csv") << fmeasure_table_csv(report);
  for (const auto& m : report.models) {
    open_out(dir / ("curve." + m.model + ".csv")) << curve_csv(m);
  }
}

}  // namespace ontovsm::io
