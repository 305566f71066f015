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

#include "csm/iedyn.h"

#include <algorithm>
#include <chrono>

namespace csm {

namespace {

/** v has a neighbor in C(c) for every child c of u except `skip`. */
bool other_children_ok(const CandidateIndex& index, QVertex u, VertexId v, QVertex skip) {
  auto arcs = index.child_arcs(u);
  for (size_t s = 0; s < arcs.size(); ++s) {
    if (index.arc(arcs[s]).child != skip && index.backward_count(u, v, s) == 0) return false;
  }
  return true;
}

}  // namespace

LocalIndex::LocalIndex(const QueryGraph& q, const LabeledGraph& g, const SpanningTree& t,
                       const CandidateIndex& global, QVertex ux, QVertex uy, VertexId vx, VertexId vy)
    : q_(q), g_(g), global_(global), ux_(ux), uy_(uy), vx_(vx), vy_(vy),
      overlay_(q.vertex_count()), has_overlay_(q.vertex_count(), false) {
  const auto path = t.path_from_root(ux);
  for (QVertex u : path) has_overlay_[u] = true;

  // Seed: vx roots a subtree match of ux that uses the updated edge.
  if (g.label(vx) == q.label(ux) && global.in_c(uy, vy) && other_children_ok(global, ux, vx, uy)) {
    overlay_[ux].push_back(vx);
  }
  // Walk up the root path.
  for (size_t i = path.size() - 1; i > 0 && !overlay_[path[i]].empty(); --i) {
    const QVertex child = path[i], p = path[i - 1];
    const Label el = q.edge_label(p, child), pl = q.label(p);
    std::vector<VertexId>& next = overlay_[p];
    for (VertexId w : overlay_[child]) {
      for (const Neighbor& nb : g.adjacency(w)) {
        if (nb.label == el && g.label(nb.id) == pl) next.push_back(nb.id);
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    std::erase_if(next, [&](VertexId v) { return !other_children_ok(global, p, v, child); });
  }
  viable_ = !overlay_[t.root].empty();
}

void LocalIndex::extensions(QVertex from_u, VertexId from_v, QVertex to_u, std::vector<VertexId>& out) const {
  out.clear();
  if (from_u == ux_ && to_u == uy_) {
    if (from_v == vx_) out.push_back(vy_);
    return;
  }
  if (from_u == uy_ && to_u == ux_) {
    if (from_v == vy_) out.push_back(vx_);
    return;
  }
  const Label el = q_.edge_label(from_u, to_u);
  for (const Neighbor& nb : g_.adjacency(from_v)) {
    if (nb.label == el && admits(to_u, nb.id)) out.push_back(nb.id);
  }
}

void LocalIndex::initial_candidates(QVertex u, std::vector<VertexId>& out) const {
  out = has_overlay_[u] ? overlay_[u] : global_.candidates(u);
}

bool LocalIndex::admits(QVertex u, VertexId v) const {
  if (has_overlay_[u]) return std::binary_search(overlay_[u].begin(), overlay_[u].end(), v);
  return global_.in_c(u, v);
}

// ---------------------------------------------------------------------------

Capabilities IeDynStrategy::capabilities() const {
  Capabilities c;
  c.batch = true;
  c.tree_queries_only = true;
  return c;
}

void IeDynStrategy::build(const QueryGraph& q, const LabeledGraph& g) {
  if (classify(q) != QueryClass::kTree) throw CapabilityError("dyn only handles tree queries");
  query_ = &q;
  tree_ = dfs_tree(q, options_.root.value_or(0));
  order_ = MatchingOrder(q, tree_.dfs_order());
  index_ = std::make_unique<CandidateIndex>(q, CandidateIndex::tree_arcs(tree_), false);
  index_->build(g);
}

void IeDynStrategy::update_index(const LabeledGraph& g, std::span<const EdgeUpdate> batch, Op op) {
  index_->apply_batch(g, batch, op);
}

void IeDynStrategy::find_matches(const LabeledGraph& g, const DeltaPlan& plan, std::span<const EdgeUpdate>,
                                 EnumContext& ctx) {
  const QueryGraph& q = *query_;
  const PartialMatch empty(q.vertex_count(), kNoVertex);
  for (size_t k = 0; k < plan.per_edge.size(); ++k) {
    const int ki = static_cast<int>(k);
    ctx_tag(ki);
    const QueryEdge& e = q.edge(k);
    const bool src_is_parent = tree_.parent[e.dst] == e.src && e.dst != tree_.root;
    const QVertex ux = src_is_parent ? e.src : e.dst;
    const QVertex uy = e.other(ux);
    for (const DeltaTuple& t : plan.per_edge[k]) {
      const VertexId vx = src_is_parent ? t.src_v : t.dst_v;
      const VertexId vy = src_is_parent ? t.dst_v : t.src_v;
      auto t0 = Clock::now();
      LocalIndex local(q, g, tree_, *index_, ux, uy, vx, vy);
      aux_seconds_ += std::chrono::duration<double>(Clock::now() - t0).count();
      if (!local.viable()) continue;
      enumerate(q, order_, local, empty, plan.exclusion(ki), ctx);
      if (ctx.stopped()) return;
    }
  }
}

std::vector<size_t> IeDynStrategy::candidate_counts(const LabeledGraph&) const {
  std::vector<size_t> counts(query_->vertex_count());
  for (QVertex u = 0; u < counts.size(); ++u) counts[u] = index_->size(u);
  return counts;
}

double IeDynStrategy::take_aux_index_seconds() {
  double s = aux_seconds_;
  aux_seconds_ = 0;
  return s;
}

}  // namespace csm
