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

#ifndef ONTOVSM_IO_HPP_
#define ONTOVSM_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "ontovsm/corpus.hpp"
#include "ontovsm/eval.hpp"
#include "ontovsm/ontology.hpp"
#include "ontovsm/retrieval.hpp"

// Readers and writers for the line-delimited JSON inputs, TREC run and qrels
// files, and evaluation reports. Errors raised while reading carry the file
// name and line number in their message.
namespace ontovsm::io {

// {"class": "City", "parents": ["Location"]}
std::vector<ClassDecl> parse_taxonomy(std::istream& in, const std::string& source);
ClassTaxonomy read_taxonomy(const std::filesystem::path& path);
void write_taxonomy(std::ostream& out, const ClassTaxonomy& taxonomy);

// {"id": "e1", "class": "City", "names": ["Saigon City", "Saigon"]}
std::vector<EntityRecord> parse_kb(std::istream& in, const std::string& source);
KnowledgeBase read_kb(const std::filesystem::path& path, const ClassTaxonomy& taxonomy);
void write_kb(std::ostream& out, const KnowledgeBase& kb);

// {"doc_id": "d1", "text": "...", "annotations": [{"start": 0, "end": 16,
//  "name": "...", "class": "...", "id": "..."}]}. An absent name, class or
// id is unspecified. "annotations" may be omitted on raw text input.
std::vector<DocumentRecord> parse_documents(std::istream& in, const std::string& source);
std::vector<DocumentRecord> read_documents(const std::filesystem::path& path);

// Parses, ingests and checks doc_id uniqueness.
std::vector<AnnotatedDocument> read_corpus(const std::filesystem::path& path,
                                           const KnowledgeBase& kb,
                                           const ClassTaxonomy& taxonomy,
                                           const Tokenizer& tokenizer = {});
std::vector<AnnotatedDocument> parse_corpus(std::istream& in, const std::string& source,
                                            const KnowledgeBase& kb,
                                            const ClassTaxonomy& taxonomy,
                                            const Tokenizer& tokenizer = {});

std::string document_to_json(const DocumentRecord& record);
void write_documents(std::ostream& out, const std::vector<DocumentRecord>& records);

// {"query_id": "q1", "keywords": ["joined"], "entities": [{"class": "Country"}]}
std::vector<Query> parse_queries(std::istream& in, const std::string& source,
                                 const KnowledgeBase& kb, const ClassTaxonomy& taxonomy,
                                 const Tokenizer& tokenizer = {});
std::vector<Query> read_queries(const std::filesystem::path& path, const KnowledgeBase& kb,
                                const ClassTaxonomy& taxonomy,
                                const Tokenizer& tokenizer = {});

// "<query_id> 0 <doc_id> <0|1>"
Qrels parse_qrels(std::istream& in, const std::string& source);
Qrels read_qrels(const std::filesystem::path& path);

// "<query_id> Q0 <doc_id> <rank> <score:6 decimals> <model-tag>"
void write_run(std::ostream& out, const RankedResult& result);

struct RunFile {
  std::string model;  // from the tag column; empty if the file has no lines
  std::vector<Run> runs;  // in first-appearance order
};
RunFile parse_run(std::istream& in, const std::string& source);
RunFile read_run(const std::filesystem::path& path);

// Table of models × eleven recall levels, values in percent with two
// decimals: "model,0,10,...,100".
std::string precision_table_csv(const EvalReport& report);
std::string fmeasure_table_csv(const EvalReport& report);
// "<recall_level>,<avg_precision>,<avg_F>" rows, fractions.
std::string curve_csv(const ModelEvaluation& model);
// Human-readable layout of both tables.
std::string format_report(const EvalReport& report);

// Writes precision.csv, fmeasure.csv and curve.<model>.csv into dir.
void write_report(const EvalReport& report, const std::filesystem::path& dir);

}  // namespace ontovsm::io

#endif  // ONTOVSM_IO_HPP_
