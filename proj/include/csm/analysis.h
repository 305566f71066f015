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

// Pruning-power tools: label baseline, the two-pass tree pruning, candidate
// reports across indexes and index/order composition.

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "csm/graph.h"
#include "csm/query.h"
#include "csm/seeded_strategy.h"

namespace csm {

/** |{v : L(v) = L(u)}| per query vertex. */
std::vector<size_t> baseline_candidates(const QueryGraph& q, const LabeledGraph& g);

/**
 * Candidate sets of a tree query: label matches, then a bottom-up pass that
 * drops vertices missing a neighbor in some child's set, then a top-down pass
 * that drops vertices missing a neighbor in the parent's set. Under
 * homomorphism every survivor appears in a match. Throws CapabilityError for
 * non-tree queries.
 */
std::vector<std::vector<VertexId>> modified_tree_pruning(const QueryGraph& q, const LabeledGraph& g,
                                                         QVertex root = 0);

/**
 * Strategy that generates orders like `order_source` and restricts candidates
 * with the index of `index_source`. Order sources: gf, tf, dyn, sym. Index
 * sources: gf (none), tf, sym.
 */
std::unique_ptr<SeededStrategy> compose_index_swap(const std::string& order_source,
                                                   const std::string& index_source,
                                                   StrategyOptions options = {});

struct CandidateReport {
  struct Row {
    std::string method;
    std::vector<size_t> c;
    std::vector<size_t> c_im;  // empty when the method has no implicit sets
    size_t total() const;
  };
  std::vector<Row> rows;

  const Row* find(const std::string& method) const;
};

/** Builds each method on (q, g) and records its candidate counts; "base"
 *  names the label baseline. Methods that reject q are skipped. */
CandidateReport candidate_report(const QueryGraph& q, const LabeledGraph& g, const std::vector<std::string>& methods,
                                 StrategyOptions options = {});

}  // namespace csm
