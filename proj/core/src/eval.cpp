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

#include "ontovsm/eval.hpp"

#include <algorithm>

#include "ontovsm/error.hpp"

namespace ontovsm {

void Qrels::add(const std::string& query_id, const std::string& doc_id, bool relevant) {
  if (!judgments_[query_id].emplace(doc_id, relevant).second) {
    throw Error(ErrorCode::kParse,
                "qrels judge (" + query_id + ", " + doc_id + ") more than once");
  }
}

bool Qrels::has_query(std::string_view query_id) const {
  return judgments_.find(query_id) != judgments_.end();
}

bool Qrels::is_relevant(std::string_view query_id, std::string_view doc_id) const {
  auto q = judgments_.find(query_id);
  if (q == judgments_.end()) return false;
  auto d = q->second.find(std::string(doc_id));
  return d != q->second.end() && d->second;
}

std::size_t Qrels::relevant_count(std::string_view query_id) const {
  auto q = judgments_.find(query_id);
  if (q == judgments_.end()) return 0;
  return static_cast<std::size_t>(std::count_if(
      q->second.begin(), q->second.end(), [](const auto& kv) { return kv.second; }));
}

std::vector<std::string> Qrels::judged_queries() const {
  std::vector<std::string> out;
  for (const auto& [q, _] : judgments_) {
    if (relevant_count(q) > 0) out.push_back(q);
  }
  return out;
}

std::vector<PrPoint> pr_points(const Run& run, const Qrels& qrels) {
  if (!qrels.has_query(run.query_id)) {
    throw Error(ErrorCode::kMissingQrels, "query '" + run.query_id + "' is not in the qrels");
  }
  const std::size_t r_q = qrels.relevant_count(run.query_id);
  if (r_q == 0) {
    throw Error(ErrorCode::kMissingQrels,
                "query '" + run.query_id + "' has no relevant documents");
  }
  std::vector<PrPoint> points;
  points.reserve(run.doc_ids.size());
  std::size_t seen = 0;
  for (std::size_t k = 1; k <= run.doc_ids.size(); ++k) {
    if (qrels.is_relevant(run.query_id, run.doc_ids[k - 1])) ++seen;
    points.push_back({static_cast<double>(seen) / static_cast<double>(r_q),
                      static_cast<double>(seen) / static_cast<double>(k)});
  }
  return points;
}

Levels interpolate_11pt(const std::vector<PrPoint>& points, Interpolation mode) {
  Levels standard{};
  for (int j = 0; j < kRecallLevels; ++j) {
    const double r = recall_level(j);
    for (const auto& p : points) {
      if (p.recall >= r) standard[j] = std::max(standard[j], p.precision);
    }
  }
  if (mode == Interpolation::kStandard) return standard;

  Levels windowed{};
  for (int j = 0; j < kRecallLevels; ++j) {
    const double lo = recall_level(j);
    const double hi = j + 1 < kRecallLevels ? recall_level(j + 1) : 1.0;
    bool any = false;
    for (const auto& p : points) {
      if (p.recall >= lo && p.recall <= hi) {
        windowed[j] = any ? std::max(windowed[j], p.precision) : p.precision;
        any = true;
      }
    }
    if (!any) windowed[j] = standard[j];
  }
  return windowed;
}

double f_measure(double precision, double recall) {
  const double sum = precision + recall;
  return sum == 0.0 ? 0.0 : 2.0 * precision * recall / sum;
}

PrCurve make_curve(const std::vector<PrPoint>& points, Interpolation mode) {
  PrCurve c;
  c.precision = interpolate_11pt(points, mode);
  for (int j = 0; j < kRecallLevels; ++j) c.f[j] = f_measure(c.precision[j], recall_level(j));
  return c;
}

PrCurve average(const std::vector<PrCurve>& curves) {
  if (curves.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "cannot average an empty list of curves");
  }
  PrCurve mean;
  for (const auto& c : curves) {
    for (int j = 0; j < kRecallLevels; ++j) {
      mean.precision[j] += c.precision[j];
      mean.f[j] += c.f[j];
    }
  }
  const double n = static_cast<double>(curves.size());
  for (int j = 0; j < kRecallLevels; ++j) {
    mean.precision[j] /= n;
    mean.f[j] /= n;
  }
  return mean;
}

ModelEvaluation evaluate_model(std::string model, const std::vector<Run>& runs,
                               const Qrels& qrels, Interpolation mode) {
  std::map<std::string, const Run*> by_query;
  for (const auto& r : runs) {
    if (!qrels.has_query(r.query_id)) {
      throw Error(ErrorCode::kMissingQrels,
                  "run for model " + model + " names query '" + r.query_id +
                      "' which is not in the qrels");
    }
    by_query[r.query_id] = &r;
  }
  const auto queries = qrels.judged_queries();
  if (queries.empty()) {
    throw Error(ErrorCode::kMissingQrels, "qrels contain no query with a relevant document");
  }
  std::vector<PrCurve> curves;
  curves.reserve(queries.size());
  for (const auto& q : queries) {
    auto it = by_query.find(q);
    if (it == by_query.end()) {
      curves.push_back(PrCurve{});
    } else {
      curves.push_back(make_curve(pr_points(*it->second, qrels), mode));
    }
  }
  return {std::move(model), average(curves), queries.size()};
}

}  // namespace ontovsm
