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

// Benchmark driver: runs (query x algorithm) cells over one graph and stream
// and reports metrics as CSV.

#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "csm/framework.h"
#include "csm/seeded_strategy.h"

namespace csm {

enum class QueryStatus { kSolved, kUnsolved, kHardUnsolved, kOutOfMemory };
const char* to_string(QueryStatus s);

struct RunMetrics {
  std::string query_id;
  std::string algo;
  QueryStatus status = QueryStatus::kSolved;
  double offline_ms = 0;
  double index_ms = 0;
  double enum_ms = 0;
  Counters counters;
  size_t candidates_total = 0;  // after the last update
  size_t peak_cached = 0;       // join-cache tuples (sj only)
  double update_p99_us = 0;

  /** Online processing time: indexing plus enumeration. */
  double query_ms() const { return index_ms + enum_ms; }
};

struct BenchmarkConfig {
  Semantics semantics = Semantics::kHomomorphism;
  double time_limit_s = 60;
  uint64_t max_results = 0;  // per update, 0: unlimited
  double hard_unsolved_results = 1e9;
  StrategyOptions options;
};

/** Runs one algorithm on a copy of `g` over `stream`. */
RunMetrics run_query(const std::string& query_id, const QueryGraph& q, const LabeledGraph& g,
                     const UpdateStream& stream, const std::string& algo, const BenchmarkConfig& cfg);

/** Unsolved runs with fewer results than the threshold are hard-unsolved. */
QueryStatus classify_status(RunStatus s, uint64_t results, double hard_threshold);

/** p-th percentile (nearest rank) of the values; 0 when empty. */
double percentile(std::vector<double> values, double p);

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const RunMetrics& m);

/** Mean over queries of t_B(Q) / t_A(Q). Both maps are keyed by query id and
 *  must cover the same queries. */
double individual_speedup(const std::map<std::string, double>& time_a, const std::map<std::string, double>& time_b);

/** Per method, the mean over queries of X_A(Q) / max_B X_B(Q). `values` maps
 *  method -> query -> value. */
std::map<std::string, double> relative_performance(
    const std::map<std::string, std::map<std::string, double>>& values);

}  // namespace csm
