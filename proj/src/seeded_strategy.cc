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

#include "csm/seeded_strategy.h"

namespace csm {

SpanningTree index_tree(const QueryGraph& q, const LabeledGraph& g, std::optional<QVertex> root) {
  if (root) return bfs_tree(q, make_dag(q, *root));
  return build_spanning_tree(q, g);
}

QueryDag index_dag(const QueryGraph& q, std::optional<QVertex> root) {
  return root ? make_dag(q, *root) : build_dag(q);
}

SeededStrategy::SeededStrategy(std::string name, IndexKind index, OrderKind order, StrategyOptions options)
    : name_(std::move(name)), index_kind_(index), order_kind_(order), options_(options) {}

Capabilities SeededStrategy::capabilities() const {
  Capabilities c;
  // The counter-based indexes are maintained one edge at a time.
  c.batch = index_kind_ == IndexKind::kNone;
  return c;
}

void SeededStrategy::build(const QueryGraph& q, const LabeledGraph& g) {
  query_ = &q;
  index_.reset();
  if (index_kind_ == IndexKind::kSpanningTree) {
    tree_ = index_tree(q, g, options_.root);
    index_ = std::make_unique<CandidateIndex>(q, CandidateIndex::tree_arcs(tree_), true);
    index_->build(g);
  } else if (index_kind_ == IndexKind::kDag) {
    dag_ = index_dag(q, options_.root);
    index_ = std::make_unique<CandidateIndex>(q, CandidateIndex::dag_arcs(dag_), true);
    index_->build(g);
  }

  switch (order_kind_) {
    case OrderKind::kGraphflow:
      catalog_ = OrderCatalog(q, [&](QVertex a, QVertex b) { return graphflow_order(q, a, b); });
      break;
    case OrderKind::kTurboflux: {
      // Path counts come from the tree index, built here if this strategy
      // pairs the orders with another index.
      SpanningTree t = index_kind_ == IndexKind::kSpanningTree ? tree_ : index_tree(q, g, options_.root);
      std::unique_ptr<CandidateIndex> own;
      const CandidateIndex* dcg = index_.get();
      if (index_kind_ != IndexKind::kSpanningTree) {
        own = std::make_unique<CandidateIndex>(q, CandidateIndex::tree_arcs(t), true);
        own->build(g);
        dcg = own.get();
      }
      base_order_ = turboflux_base_order(q, t, path_match_counts(q, t, g, *dcg));
      catalog_ = OrderCatalog(q, [&](QVertex a, QVertex b) { return seeded_tree_order(q, t, base_order_, a, b); });
      if (index_kind_ != IndexKind::kSpanningTree) tree_ = t;
      break;
    }
    case OrderKind::kTreeDfs: {
      SpanningTree t = dfs_tree(q, options_.root.value_or(0));
      base_order_ = t.dfs_order();
      catalog_ = OrderCatalog(q, [&](QVertex a, QVertex b) { return seeded_tree_order(q, t, base_order_, a, b); });
      break;
    }
    case OrderKind::kDynamic:
      break;
  }
}

void SeededStrategy::on_vertex_added(const LabeledGraph& g, VertexId v) {
  if (index_) index_->add_vertex(g, v);
}

void SeededStrategy::on_vertex_relabeled(const LabeledGraph& g, VertexId v) {
  if (index_) index_->relabel_vertex(g, v);
}

void SeededStrategy::update_index(const LabeledGraph& g, std::span<const EdgeUpdate> batch, Op op) {
  if (!index_) return;
  index_->apply_batch(g, batch, op);
}

void SeededStrategy::find_matches(const LabeledGraph& g, const DeltaPlan& plan, std::span<const EdgeUpdate>,
                                  EnumContext& ctx) {
  const QueryGraph& q = *query_;
  GraphView graph_view(q, g);
  std::unique_ptr<IndexedView> indexed;
  if (index_) indexed = std::make_unique<IndexedView>(q, g, *index_);
  const RelationView& view = index_ ? static_cast<const RelationView&>(*indexed) : graph_view;

  for (size_t k = 0; k < plan.per_edge.size(); ++k) {
    const int ki = static_cast<int>(k);
    ctx_tag(ki);
    const Exclusion excl = plan.exclusion(ki);
    for (const DeltaTuple& t : plan.per_edge[k]) {
      PartialMatch seed = seed_match(q, ki, t);
      if (order_kind_ == OrderKind::kDynamic) {
        enumerate_dynamic(q, view, seed, excl, ctx);
      } else {
        enumerate(q, catalog_.for_tuple(ki, t), view, seed, excl, ctx);
      }
      if (ctx.stopped()) return;
    }
  }
}

std::vector<size_t> SeededStrategy::candidate_counts(const LabeledGraph& g) const {
  if (!index_) return Strategy::candidate_counts(g);
  std::vector<size_t> counts(query_->vertex_count());
  for (QVertex u = 0; u < counts.size(); ++u) counts[u] = index_->size(u);
  return counts;
}

std::unique_ptr<SeededStrategy> make_graphflow(StrategyOptions options) {
  return std::make_unique<SeededStrategy>("gf", IndexKind::kNone, OrderKind::kGraphflow, options);
}

std::unique_ptr<SeededStrategy> make_turboflux(StrategyOptions options) {
  return std::make_unique<SeededStrategy>("tf", IndexKind::kSpanningTree, OrderKind::kTurboflux, options);
}

std::unique_ptr<SeededStrategy> make_symbi(StrategyOptions options) {
  return std::make_unique<SeededStrategy>("sym", IndexKind::kDag, OrderKind::kDynamic, options);
}

}  // namespace csm
