// Copyright 2026 The csm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "csm/harness.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "csm/sjtree.h"
#include "csm/strategy_factory.h"

namespace csm {

const char* to_string(QueryStatus s) {
  switch (s) {
    case QueryStatus::kSolved: return "solved";
    case QueryStatus::kUnsolved: return "unsolved";
    case QueryStatus::kHardUnsolved: return "hard-unsolved";
    case QueryStatus::kOutOfMemory: return "out-of-memory";
  }
  return "?";
}

QueryStatus classify_status(RunStatus s, uint64_t results, double hard_threshold) {
  switch (s) {
    case RunStatus::kSolved: return QueryStatus::kSolved;
    case RunStatus::kOutOfMemory: return QueryStatus::kOutOfMemory;
    case RunStatus::kUnsolved:
      return static_cast<double>(results) < hard_threshold ? QueryStatus::kHardUnsolved : QueryStatus::kUnsolved;
  }
  return QueryStatus::kUnsolved;
}

double percentile(std::vector<double> values, double p) {
  if (values.empty()) return 0;
  std::sort(values.begin(), values.end());
  size_t rank = static_cast<size_t>(std::ceil(p / 100.0 * static_cast<double>(values.size())));
  rank = std::clamp<size_t>(rank, 1, values.size());
  return values[rank - 1];
}

RunMetrics run_query(const std::string& query_id, const QueryGraph& q, const LabeledGraph& g,
                     const UpdateStream& stream, const std::string& algo, const BenchmarkConfig& cfg) {
  auto strategy = make_strategy(algo, cfg.options);
  LabeledGraph data = g;
  RunConfig rc;
  rc.semantics = cfg.semantics;
  rc.limit_per_update = cfg.max_results;
  rc.time_limit_s = cfg.time_limit_s;
  rc.keep_matches = false;
  StreamOutcome out = run_stream(q, data, stream, *strategy, rc);

  RunMetrics m;
  m.query_id = query_id;
  m.algo = algo;
  m.status = classify_status(out.totals.status, out.totals.counters.results, cfg.hard_unsolved_results);
  m.offline_ms = out.totals.offline_ms;
  m.index_ms = out.totals.index_ms;
  m.enum_ms = out.totals.enum_ms;
  m.counters = out.totals.counters;
  if (out.totals.status != RunStatus::kOutOfMemory) {
    const auto counts = strategy->candidate_counts(data);
    m.candidates_total = std::accumulate(counts.begin(), counts.end(), size_t{0});
  }
  // The join cache only grows, so its final size is the peak.
  if (auto* sj = dynamic_cast<SjTreeStrategy*>(strategy.get())) m.peak_cached = sj->cached_tuples();
  m.update_p99_us = percentile(out.totals.update_ms, 99) * 1e3;
  return m;
}

void write_csv_header(std::ostream& out) {
  out << "query_id,algo,status,offline_ms,index_ms,enum_ms,results,emp,vis,inv,candidates_total,update_p99_us\n";
}

void write_csv_row(std::ostream& out, const RunMetrics& m) {
  out << m.query_id << ',' << m.algo << ',' << to_string(m.status) << ',' << m.offline_ms << ',' << m.index_ms
      << ',' << m.enum_ms << ',' << m.counters.results << ',' << m.counters.emp << ',' << m.counters.vis << ','
      << m.counters.invalid() << ',' << m.candidates_total << ',' << m.update_p99_us << '\n';
}

double individual_speedup(const std::map<std::string, double>& time_a, const std::map<std::string, double>& time_b) {
  if (time_a.empty() || time_a.size() != time_b.size()) throw std::invalid_argument("query sets differ");
  double sum = 0;
  for (const auto& [query, ta] : time_a) {
    auto it = time_b.find(query);
    if (it == time_b.end()) throw std::invalid_argument("query sets differ");
    sum += it->second / ta;
  }
  return sum / static_cast<double>(time_a.size());
}

std::map<std::string, double> relative_performance(
    const std::map<std::string, std::map<std::string, double>>& values) {
  std::map<std::string, double> best;
  for (const auto& [method, per_query] : values) {
    for (const auto& [query, x] : per_query) best[query] = std::max(best[query], x);
  }
  std::map<std::string, double> out;
  for (const auto& [method, per_query] : values) {
    double sum = 0;
    for (const auto& [query, x] : per_query) sum += best[query] > 0 ? x / best[query] : 1.0;
    out[method] = per_query.empty() ? 0 : sum / static_cast<double>(per_query.size());
  }
  return out;
}

}  // namespace csm
