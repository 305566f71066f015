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

#include "csm/orders.h"

#include <algorithm>
#include <limits>
#include <tuple>

namespace csm {

std::vector<QVertex> graphflow_order(const QueryGraph& q, QVertex first, QVertex second) {
  const size_t n = q.vertex_count();
  std::vector<QVertex> order{first, second};
  std::vector<bool> placed(n, false);
  placed[first] = placed[second] = true;
  std::vector<size_t> links(n, 0);
  for (QVertex w : q.neighbors(first)) ++links[w];
  for (QVertex w : q.neighbors(second)) ++links[w];
  while (order.size() < n) {
    QVertex best = kNoVertex;
    for (QVertex u = 0; u < n; ++u) {
      if (placed[u] || links[u] == 0) continue;
      if (best == kNoVertex || std::make_pair(links[u], q.degree(u)) > std::make_pair(links[best], q.degree(best))) {
        best = u;
      }
    }
    placed[best] = true;
    order.push_back(best);
    for (QVertex w : q.neighbors(best)) ++links[w];
  }
  return order;
}

std::vector<double> path_match_counts(const QueryGraph& q, const SpanningTree& t, const LabeledGraph& g,
                                      const CandidateIndex& index) {
  const size_t n = q.vertex_count();
  std::vector<double> total(n, 0);
  // ways[u][v]: matches of the root path of u ending at v.
  std::vector<std::vector<double>> ways(n);
  for (QVertex u : t.dfs_order()) {
    ways[u].assign(g.vertex_count(), 0);
    if (u == t.root) {
      for (VertexId v : index.candidates(u)) ways[u][v] = 1;
    } else {
      const QVertex p = t.parent[u];
      const Label el = q.edge_label(p, u);
      for (VertexId v : index.candidates(u)) {
        double w = 0;
        for (const Neighbor& nb : g.adjacency(v)) {
          if (nb.label == el && index.in_c(p, nb.id)) w += ways[p][nb.id];
        }
        ways[u][v] = w;
      }
    }
    for (double w : ways[u]) total[u] += w;
  }
  return total;
}

std::vector<QVertex> turboflux_base_order(const QueryGraph& q, const SpanningTree& t,
                                          const std::vector<double>& path_counts) {
  const size_t n = q.vertex_count();
  std::vector<size_t> live_children(n, 0);
  for (QVertex u = 0; u < n; ++u) live_children[u] = t.children[u].size();
  std::vector<bool> removed(n, false);
  std::vector<QVertex> removal;
  for (size_t step = 0; step + 1 < n; ++step) {
    QVertex best = kNoVertex;
    for (QVertex u = 0; u < n; ++u) {
      if (removed[u] || u == t.root || live_children[u] != 0) continue;
      if (best == kNoVertex || path_counts[u] < path_counts[best]) best = u;
    }
    removed[best] = true;
    removal.push_back(best);
    --live_children[t.parent[best]];
  }
  removal.push_back(t.root);
  std::reverse(removal.begin(), removal.end());
  return removal;
}

std::vector<QVertex> seeded_tree_order(const QueryGraph& q, const SpanningTree& t,
                                       const std::vector<QVertex>& base, QVertex first, QVertex second) {
  std::vector<bool> placed(q.vertex_count(), false);
  std::vector<QVertex> order;
  auto place = [&](QVertex u) {
    if (!placed[u]) {
      placed[u] = true;
      order.push_back(u);
    }
  };
  place(first);
  place(second);
  for (QVertex u = first; u != t.root;) {
    u = t.parent[u];
    place(u);
  }
  for (QVertex u : base) place(u);
  return order;
}

std::vector<int> sj_edge_order(const QueryGraph& q, const LabeledGraph& g) {
  const auto rel = relation_sizes(q, g);
  const size_t m = q.edge_count();
  std::vector<bool> used(m, false), covered(q.vertex_count(), false);
  std::vector<int> order;
  for (size_t step = 0; step < m; ++step) {
    int best = -1;
    for (size_t k = 0; k < m; ++k) {
      if (used[k]) continue;
      const QueryEdge& e = q.edge(k);
      if (step > 0 && !covered[e.src] && !covered[e.dst]) continue;
      if (best < 0 || rel[k] < rel[best]) best = static_cast<int>(k);
    }
    used[best] = true;
    covered[q.edge(best).src] = covered[q.edge(best).dst] = true;
    order.push_back(best);
  }
  return order;
}

OrderCatalog::OrderCatalog(const QueryGraph& q, const Generator& gen) : q_(&q) {
  for (size_t k = 0; k < q.edge_count(); ++k) {
    const QueryEdge& e = q.edge(k);
    const int ki = static_cast<int>(k);
    orders_.emplace(std::make_pair(ki, false), MatchingOrder(q, gen(e.src, e.dst)));
    if (q.label(e.src) == q.label(e.dst)) {
      orders_.emplace(std::make_pair(ki, true), MatchingOrder(q, gen(e.dst, e.src)));
    }
  }
}

const MatchingOrder& OrderCatalog::for_tuple(int k, const DeltaTuple& t) const {
  const QueryEdge& e = q_->edge(k);
  // Start from the vertex matched to the update's first endpoint when the
  // labels leave a choice.
  bool dst_first = t.reversed && q_->label(e.src) == q_->label(e.dst);
  return get(k, dst_first);
}

}  // namespace csm
