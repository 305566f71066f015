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

// Dataset tooling: split a static graph into an initial graph and an update
// stream, relabel vertices, and extract queries by random walks.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csm/graph.h"
#include "csm/query.h"

namespace csm {

enum class SampleMode { kSuffix, kRandom };

struct SampledStream {
  LabeledGraph initial;
  UpdateStream stream;  // one edge per batch
};

/**
 * Insertion (op = kInsert): round(rate * |E|) edges become "+" updates and the
 * rest the initial graph. Deletion: the whole graph is initial and the sampled
 * edges become "-" updates. Suffix mode takes the last edges in file order;
 * random mode samples with `seed`.
 */
SampledStream sample_stream(const std::vector<Label>& labels, const std::vector<Edge>& edges, double rate,
                            SampleMode mode, Op op, uint64_t seed);

enum class LabelDistribution { kUniform, kLinear, kZipf };

/** P(label i), i = 0..k-1: uniform, linear (k - i), or Zipf (1 / (i + 1)); sums to 1. */
std::vector<double> label_probabilities(size_t k, LabelDistribution d);
/** One label per vertex drawn from the distribution. */
std::vector<Label> assign_labels(size_t vertices, size_t k, LabelDistribution d, uint64_t seed);

enum class QueryShape { kTree, kSparse, kDense, kPath, kStar, kCycle };

std::optional<QueryShape> parse_shape(const std::string& s);
std::optional<LabelDistribution> parse_distribution(const std::string& s);
/** Whether q has the shape (classification for tree/sparse/dense, exact for the rest). */
bool has_shape(const QueryGraph& q, QueryShape shape);

/**
 * Up to `count` connected queries with `size` vertices extracted from g by
 * random walks; vertex and edge labels are copied. Gives up on a query after
 * a bounded number of attempts, so fewer may be returned.
 */
std::vector<QueryGraph> extract_queries(const LabeledGraph& g, QueryShape shape, size_t size, size_t count,
                                        uint64_t seed);

}  // namespace csm
