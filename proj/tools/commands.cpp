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

#include "commands.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "ontovsm/corpus.hpp"
#include "ontovsm/error.hpp"
#include "ontovsm/io.hpp"
#include "ontovsm/ontology.hpp"

namespace ontovsm::cli {

namespace {

namespace fs = std::filesystem;

constexpr const char* kIndexTaxonomy = "taxonomy.jsonl";
constexpr const char* kIndexKb = "kb.jsonl";

void require(const fs::path& p, const char* flag) {
  if (p.empty()) {
    throw Error(ErrorCode::kInvalidArgument, std::string("missing required flag ") + flag);
  }
}

std::ofstream open_out(const fs::path& p) {
  if (p.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(p.parent_path(), ec);
  }
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + p.string());
  return out;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

struct Ontology {
  ClassTaxonomy taxonomy;
  KnowledgeBase kb;
};

// Explicit --taxonomy/--kb win; otherwise the copies stored with the index.
Ontology load_ontology(const CliConfig& c) {
  fs::path tax = c.taxonomy;
  fs::path kb = c.kb;
  if (tax.empty() && !c.index.empty()) tax = c.index / kIndexTaxonomy;
  if (kb.empty() && !c.index.empty()) kb = c.index / kIndexKb;
  require(tax, "--taxonomy");
  require(kb, "--kb");
  Ontology o;
  o.taxonomy = io::read_taxonomy(tax);
  o.kb = io::read_kb(kb, o.taxonomy);
  return o;
}

fs::path run_path(const fs::path& out, ModelKind m) {
  return out / ("run." + std::string(model_name(m)) + ".txt");
}

void build_index_into(const CliConfig& c, const fs::path& index_dir, std::ostream& log) {
  require(c.corpus, "--corpus");
  auto onto = load_ontology(c);
  IndexConfig ic;
  if (!c.stopwords.empty()) ic.tokenizer = Tokenizer(read_stopwords(c.stopwords.string()));
  auto docs = io::read_corpus(c.corpus, onto.kb, onto.taxonomy, ic.tokenizer);
  auto ix = InvertedIndex::build(docs, onto.kb, onto.taxonomy, ic);
  ix.save(index_dir);
  auto tax_out = open_out(index_dir / kIndexTaxonomy);
  io::write_taxonomy(tax_out, onto.taxonomy);
  auto kb_out = open_out(index_dir / kIndexKb);
  io::write_kb(kb_out, onto.kb);

  log << "indexed " << ix.num_docs() << " docs; terms: N=" << ix.term_count(Space::kName)
      << ", C=" << ix.term_count(Space::kClass) << ", NC=" << ix.term_count(Space::kNameClass)
      << ", I=" << ix.term_count(Space::kIdentifier) << ", KW=" << ix.term_count(Space::kKeyword)
      << '\n';
}

void search_into(const CliConfig& c, const fs::path& index_dir, std::ostream& log) {
  c.model_config.validate();
  require(c.queries, "--queries");
  require(c.out, "--out");
  auto ix = InvertedIndex::load(index_dir);
  CliConfig with_index = c;
  with_index.index = index_dir;
  auto onto = load_ontology(with_index);
  auto queries = io::read_queries(c.queries, onto.kb, onto.taxonomy, ix.tokenizer());

  std::error_code ec;
  fs::create_directories(c.out, ec);
  for (ModelKind m : c.models) {
    auto out = open_out(run_path(c.out, m));
    std::size_t skipped = 0;
    for (const auto& q : queries) {
      try {
        io::write_run(out, search(ix, q, m, c.model_config, c.top_k));
      } catch (const Error& e) {
        // A query this model cannot express retrieves nothing.
        if (e.code() != ErrorCode::kEmptyQuery) throw;
        ++skipped;
      }
    }
    log << "wrote " << run_path(c.out, m).string() << " (" << queries.size() - skipped
        << " queries";
    if (skipped > 0) log << ", " << skipped << " without usable terms";
    log << ")\n";
  }
}

EvalReport evaluate_runs(const std::vector<fs::path>& runs, const Qrels& qrels,
                         Interpolation mode) {
  EvalReport report;
  std::set<std::string> names;
  for (const auto& path : runs) {
    auto file = io::read_run(path);
    std::string model = file.model;
    if (model.empty()) {
      model = path.stem().string();
      if (model.rfind("run.", 0) == 0) model = model.substr(4);
    }
    if (!names.insert(model).second) {
      throw Error(ErrorCode::kInvalidArgument, "two run files for model '" + model + "'");
    }
    try {
      report.models.push_back(evaluate_model(model, file.runs, qrels, mode));
    } catch (const Error& e) {
      throw Error(e.code(), path.string() + ": " + e.what());
    }
  }
  return report;
}

void eval_into(const CliConfig& c, const std::vector<fs::path>& runs, std::ostream& log) {
  require(c.qrels, "--qrels");
  require(c.out, "--out");
  if (runs.empty()) throw Error(ErrorCode::kInvalidArgument, "no run files to evaluate");
  auto qrels = io::read_qrels(c.qrels);
  auto report = evaluate_runs(runs, qrels, c.interpolation);
  io::write_report(report, c.out);
  log << io::format_report(report);
}

}  // namespace

std::vector<ModelKind> parse_models(const std::string& list) {
  std::vector<ModelKind> models;
  for (const auto& name : split_commas(list)) {
    if (name == "all") {
      models.insert(models.end(), kAllModels.begin(), kAllModels.end());
    } else {
      models.push_back(parse_model(name));
    }
  }
  if (models.empty()) throw Error(ErrorCode::kUnknownModel, "no models selected");
  return models;
}

void parse_weights(const std::string& list, ModelConfig& cfg) {
  auto parts = split_commas(list);
  if (parts.size() != 4) {
    throw Error(ErrorCode::kInvalidConfig, "--weights needs four values wN,wC,wNC,wI");
  }
  double w[4];
  for (int i = 0; i < 4; ++i) {
    try {
      std::size_t used = 0;
      w[i] = std::stod(parts[i], &used);
      if (used != parts[i].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidConfig, "bad weight '" + parts[i] + "'");
    }
  }
  cfg.w_name = w[0];
  cfg.w_class = w[1];
  cfg.w_name_class = w[2];
  cfg.w_identifier = w[3];
}

Interpolation parse_interpolation(const std::string& mode) {
  if (mode == "standard") return Interpolation::kStandard;
  if (mode == "windowed") return Interpolation::kWindowed;
  throw Error(ErrorCode::kInvalidArgument, "unknown interpolation mode '" + mode + "'");
}

void cmd_build_index(const CliConfig& c, std::ostream& log) {
  require(c.index, "--index");
  build_index_into(c, c.index, log);
}

void cmd_search(const CliConfig& c, std::ostream& log) {
  require(c.index, "--index");
  search_into(c, c.index, log);
}

void cmd_eval(const CliConfig& c, std::ostream& log) { eval_into(c, c.runs, log); }

void cmd_annotate(const CliConfig& c, std::ostream& log) {
  require(c.corpus, "--corpus");
  require(c.out, "--out");
  auto onto = load_ontology(c);
  const Gazetteer gazetteer(onto.kb);
  auto records = io::read_documents(c.corpus);
  std::set<std::string> seen;
  std::size_t mentions = 0;
  for (auto& r : records) {
    if (!seen.insert(r.doc_id).second) {
      throw Error(ErrorCode::kDuplicateDocument, "duplicate doc_id '" + r.doc_id + "'");
    }
    r.annotations = gazetteer.annotate(r.text);
    mentions += r.annotations.size();
    ingest_document(r, onto.kb, onto.taxonomy);
  }
  auto out = open_out(c.out);
  io::write_documents(out, records);
  log << "annotated " << records.size() << " docs; " << mentions << " entity mentions\n";
}

void cmd_compare(const CliConfig& c, std::ostream& log) {
  c.model_config.validate();
  require(c.out, "--out");
  require(c.qrels, "--qrels");
  fs::path index_dir = c.index;
  if (!c.corpus.empty()) {
    if (index_dir.empty()) index_dir = c.out / "index";
    build_index_into(c, index_dir, log);
  }
  require(index_dir, "--index or --corpus");
  search_into(c, index_dir, log);
  std::vector<fs::path> runs;
  for (ModelKind m : c.models) runs.push_back(run_path(c.out, m));
  eval_into(c, runs, log);
}

void cmd_dump(const CliConfig& c, std::ostream& log) {
  require(c.index, "--index");
  auto ix = InvertedIndex::load(c.index);
  if (c.out.empty()) {
    ix.dump(log, c.dump_space);
  } else {
    auto out = open_out(c.out);
    ix.dump(out, c.dump_space);
  }
}

int run_main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ontology-aware vector space retrieval: index, search, evaluate"};
  app.require_subcommand(1);

  CliConfig c;
  std::string taxonomy, kb, corpus, queries, qrels, index, outp, stopwords;
  std::string models = "all", weights, interp = "standard", space = "UNIFIED";
  std::vector<std::string> runs;
  double alpha = c.model_config.alpha;
  std::size_t top_k = c.top_k;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--taxonomy", taxonomy, "Class taxonomy (JSONL)");
    sub->add_option("--kb", kb, "Entity knowledge base (JSONL)");
  };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--queries", queries, "Query file (JSONL)");
    sub->add_option("--models", models, "Comma-separated models, or 'all'");
    sub->add_option("--weights", weights, "Entity space weights wN,wC,wNC,wI");
    sub->add_option("--alpha", alpha, "Entity/keyword mix in [0,1]");
    sub->add_option("--top-k", top_k, "Results per query");
  };

  auto* build = app.add_subcommand("build-index", "Ingest a corpus and write an index");
  add_common(build);
  build->add_option("--corpus", corpus, "Annotated corpus (JSONL)");
  build->add_option("--index", index, "Index directory to write");
  build->add_option("--stopwords", stopwords, "Stopword list, one per line");

  auto* annotate = app.add_subcommand("annotate", "Annotate raw text with the KB gazetteer");
  add_common(annotate);
  annotate->add_option("--corpus", corpus, "Raw corpus (JSONL with doc_id, text)");
  annotate->add_option("--out", outp, "Annotated corpus to write");

  auto* searchc = app.add_subcommand("search", "Write one TREC run file per model");
  add_common(searchc);
  add_search(searchc);
  searchc->add_option("--index", index, "Index directory");
  searchc->add_option("--out", outp, "Directory for run files");

  auto* evalc = app.add_subcommand("eval", "Evaluate run files against qrels");
  evalc->add_option("--qrels", qrels, "Relevance judgments (TREC qrels)");
  evalc->add_option("--out", outp, "Directory for report files");
  evalc->add_option("--interp", interp, "standard|windowed");
  evalc->add_option("runs", runs, "Run files")->required();

  auto* compare = app.add_subcommand("compare", "Search with every model, then evaluate");
  add_common(compare);
  add_search(compare);
  compare->add_option("--index", index, "Index directory (written when --corpus is given)");
  compare->add_option("--corpus", corpus, "Build the index from this corpus first");
  compare->add_option("--stopwords", stopwords, "Stopword list for the index build");
  compare->add_option("--qrels", qrels, "Relevance judgments (TREC qrels)");
  compare->add_option("--out", outp, "Directory for runs and report");
  compare->add_option("--interp", interp, "standard|windowed");

  auto* dump = app.add_subcommand("dump", "Print the term dictionary with postings");
  dump->add_option("--index", index, "Index directory");
  dump->add_option("--space", space, "N|C|NC|I|KW|BASE|UNIFIED");
  dump->add_option("--out", outp, "Write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    for (char& ch : msg) {
      if (ch == '\n') ch = ' ';
    }
    err << "error: usage: " << msg << '\n';
    return 2;
  }

  try {
    c.taxonomy = taxonomy;
    c.kb = kb;
    c.corpus = corpus;
    c.queries = queries;
    c.qrels = qrels;
    c.index = index;
    c.out = outp;
    c.stopwords = stopwords;
    c.runs.assign(runs.begin(), runs.end());
    c.models = parse_models(models);
    if (!weights.empty()) parse_weights(weights, c.model_config);
    c.model_config.alpha = alpha;
    c.model_config.validate();
    c.interpolation = parse_interpolation(interp);
    c.top_k = top_k;
    c.dump_space = parse_space(space);

    if (build->parsed()) cmd_build_index(c, out);
    if (annotate->parsed()) cmd_annotate(c, out);
    if (searchc->parsed()) cmd_search(c, out);
    if (evalc->parsed()) cmd_eval(c, out);
    if (compare->parsed()) cmd_compare(c, out);
    if (dump->parsed()) cmd_dump(c, out);
  } catch (const Error& e) {
    std::string msg = e.what();
    for (char& ch : msg) {
      if (ch == '\n') ch = ' ';
    }
    err << "error: " << code_name(e.code()) << ": " << msg << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace ontovsm::cli
