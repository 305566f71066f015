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

#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "csm/candidate_index.h"
#include "csm/enumerator.h"
#include "csm/framework.h"
#include "csm/query.h"

namespace csm {

/** Starts with (first, second), then repeatedly the vertex with the most
 *  neighbors already placed; ties: higher degree, then smaller id. */
std::vector<QVertex> graphflow_order(const QueryGraph& q, QVertex first, QVertex second);

/** Number of matches of the root-to-u tree path in C, per query vertex. */
std::vector<double> path_match_counts(const QueryGraph& q, const SpanningTree& t, const LabeledGraph& g,
                                      const CandidateIndex& index);

/** Repeatedly removes the non-root leaf whose root path has the fewest
 *  matches; the order is the reverse of the removals. Parents precede
 *  children. */
std::vector<QVertex> turboflux_base_order(const QueryGraph& q, const SpanningTree& t,
                                          const std::vector<double>& path_counts);

/** (first, second), then the tree path from `first` up to the root, then the
 *  remaining vertices in `base` order. `base` must list every tree parent
 *  before its children. */
std::vector<QVertex> seeded_tree_order(const QueryGraph& q, const SpanningTree& t,
                                       const std::vector<QVertex>& base, QVertex first, QVertex second);

/** Greedy edge order: smallest relation first, then the smallest relation
 *  among edges touching the covered vertices; ties by canonical index. */
std::vector<int> sj_edge_order(const QueryGraph& q, const LabeledGraph& g);

/**
 * One matching order per query edge, starting at the edge's endpoints. Edges
 * whose endpoints share a label get a second order starting at the
 * destination.
 */
class OrderCatalog {
 public:
  using Generator = std::function<std::vector<QVertex>(QVertex first, QVertex second)>;

  OrderCatalog() = default;
  OrderCatalog(const QueryGraph& q, const Generator& gen);

  /** Order used for a delta tuple of edge k. */
  const MatchingOrder& for_tuple(int k, const DeltaTuple& t) const;
  const MatchingOrder& get(int k, bool dst_first) const { return orders_.at({k, dst_first}); }
  size_t size() const { return orders_.size(); }

 private:
  const QueryGraph* q_ = nullptr;
  std::map<std::pair<int, bool>, MatchingOrder> orders_;
};

}  // namespace csm
