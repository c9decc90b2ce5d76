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

#ifndef ONTOVSM_EVAL_HPP_
#define ONTOVSM_EVAL_HPP_

#include <array>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ontovsm {

inline constexpr int kRecallLevels = 11;
using Levels = std::array<double, kRecallLevels>;

// r_j = j / 10 for j = 0..10.
constexpr double recall_level(int j) { return j / 10.0; }

// Relevance judgments.
class Qrels {
 public:
  // Throws kParse on a repeated (query, doc) pair.
  void add(const std::string& query_id, const std::string& doc_id, bool relevant);

  bool has_query(std::string_view query_id) const;
  bool is_relevant(std::string_view query_id, std::string_view doc_id) const;
  std::size_t relevant_count(std::string_view query_id) const;
  // Queries with at least one relevant document, sorted.
  std::vector<std::string> judged_queries() const;

 private:
  std::map<std::string, std::map<std::string, bool>, std::less<>> judgments_;
};

// One ranked list of document ids for a query.
struct Run {
  std::string query_id;
  std::vector<std::string> doc_ids;
};

struct PrPoint {
  double recall;
  double precision;

  friend bool operator==(const PrPoint&, const PrPoint&) = default;
};

// One point per rank k: (rel_seen(k) / R_q, rel_seen(k) / k).
// Throws kMissingQrels when the query is unjudged or has R_q = 0.
std::vector<PrPoint> pr_points(const Run& run, const Qrels& qrels);

enum class Interpolation {
  kStandard,  // max precision at any recall >= r_j
  kWindowed,  // max over recall in [r_j, r_{j+1}], standard value if empty
};

Levels interpolate_11pt(const std::vector<PrPoint>& points,
                        Interpolation mode = Interpolation::kStandard);

// 2·P·r / (P + r), and 0 when P + r = 0.
double f_measure(double precision, double recall);

struct PrCurve {
  Levels precision{};
  Levels f{};

  friend bool operator==(const PrCurve&, const PrCurve&) = default;
};

// Interpolated precisions, with F computed per level from them.
PrCurve make_curve(const std::vector<PrPoint>& points,
                   Interpolation mode = Interpolation::kStandard);

// Pointwise mean of P and of F. Throws kInvalidArgument on an empty list.
PrCurve average(const std::vector<PrCurve>& curves);

struct ModelEvaluation {
  std::string model;
  PrCurve curve;            // averaged over queries
  std::size_t num_queries;  // N_q
};

// Averages a model's runs over every judged query (R_q > 0). A judged query
// with no run counts as an all-zero curve. Throws kMissingQrels when a run
// names a query absent from the qrels.
ModelEvaluation evaluate_model(std::string model, const std::vector<Run>& runs,
                               const Qrels& qrels,
                               Interpolation mode = Interpolation::kStandard);

struct EvalReport {
  std::vector<ModelEvaluation> models;
};

}  // namespace ontovsm

#endif  // ONTOVSM_EVAL_HPP_
