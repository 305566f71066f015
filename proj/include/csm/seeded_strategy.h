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

// Strategies that enumerate each incremental component from a seeded update
// edge with vertex-at-a-time backtracking:
//
//   graphflow  no index, greedy per-edge orders
//   turboflux  spanning-tree index (C_im / C), per-edge orders from root path counts
//   symbi      DAG index over every query edge, dynamic candidate-size order
//
// The index and the ordering are independent, so any index can be paired
// with any of the orders (index-swapped variants).

#pragma once

#include <memory>
#include <optional>
#include <string>

#include "csm/candidate_index.h"
#include "csm/framework.h"
#include "csm/orders.h"

namespace csm {

enum class IndexKind { kNone, kSpanningTree, kDag };
enum class OrderKind { kGraphflow, kTurboflux, kTreeDfs, kDynamic };

struct StrategyOptions {
  /** Force the root of the index / tree (default: each method's own rule). */
  std::optional<QVertex> root;
  /** Tuple cap for strategies that cache partial results. */
  size_t memory_cap = 10'000'000;
};

class SeededStrategy : public Strategy {
 public:
  SeededStrategy(std::string name, IndexKind index, OrderKind order, StrategyOptions options = {});

  std::string name() const override { return name_; }
  Capabilities capabilities() const override;
  void build(const QueryGraph& q, const LabeledGraph& g) override;
  void on_vertex_added(const LabeledGraph& g, VertexId v) override;
  void on_vertex_relabeled(const LabeledGraph& g, VertexId v) override;
  void update_index(const LabeledGraph& g, std::span<const EdgeUpdate> batch, Op op) override;
  void find_matches(const LabeledGraph& g, const DeltaPlan& plan, std::span<const EdgeUpdate> batch,
                    EnumContext& ctx) override;
  std::vector<size_t> candidate_counts(const LabeledGraph& g) const override;

  IndexKind index_kind() const { return index_kind_; }
  OrderKind order_kind() const { return order_kind_; }
  const CandidateIndex* index() const { return index_.get(); }
  const SpanningTree& tree() const { return tree_; }
  const QueryDag& dag() const { return dag_; }
  const OrderCatalog& catalog() const { return catalog_; }
  /** Order the catalog was derived from (tree-based orders only). */
  const std::vector<QVertex>& base_order() const { return base_order_; }

 private:
  std::string name_;
  IndexKind index_kind_;
  OrderKind order_kind_;
  StrategyOptions options_;
  SpanningTree tree_;
  QueryDag dag_;
  std::unique_ptr<CandidateIndex> index_;
  OrderCatalog catalog_;
  std::vector<QVertex> base_order_;
};

/** Spanning tree used by the tree index: the greedy tree, or with a forced
 *  root the BFS tree of the DAG rooted there. */
SpanningTree index_tree(const QueryGraph& q, const LabeledGraph& g, std::optional<QVertex> root);
/** DAG used by the DAG index. */
QueryDag index_dag(const QueryGraph& q, std::optional<QVertex> root);

std::unique_ptr<SeededStrategy> make_graphflow(StrategyOptions options = {});
std::unique_ptr<SeededStrategy> make_turboflux(StrategyOptions options = {});
std::unique_ptr<SeededStrategy> make_symbi(StrategyOptions options = {});

}  // namespace csm
