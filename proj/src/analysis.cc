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

#include "csm/analysis.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "csm/iedyn.h"
#include "csm/strategy_factory.h"

namespace csm {

std::vector<size_t> baseline_candidates(const QueryGraph& q, const LabeledGraph& g) {
  std::vector<size_t> out(q.vertex_count(), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (QVertex u = 0; u < q.vertex_count(); ++u) {
      if (q.label(u) == g.label(v)) ++out[u];
    }
  }
  return out;
}

namespace {

bool has_neighbor_in(const LabeledGraph& g, VertexId v, Label el, const std::vector<uint8_t>& in) {
  for (const Neighbor& n : g.adjacency(v)) {
    if (n.label == el && in[n.id]) return true;
  }
  return false;
}

}  // namespace

std::vector<std::vector<VertexId>> modified_tree_pruning(const QueryGraph& q, const LabeledGraph& g, QVertex root) {
  if (classify(q) != QueryClass::kTree) throw CapabilityError("modified pruning needs a tree query");
  const size_t n = q.vertex_count(), nv = g.vertex_count();
  const SpanningTree t = dfs_tree(q, root);
  const auto top_down = t.dfs_order();

  std::vector<std::vector<uint8_t>> in(n, std::vector<uint8_t>(nv, 0));
  for (QVertex u = 0; u < n; ++u) {
    for (VertexId v = 0; v < nv; ++v) in[u][v] = g.label(v) == q.label(u);
  }
  // Children come after their parent in preorder, so reversed preorder is bottom-up.
  for (auto it = top_down.rbegin(); it != top_down.rend(); ++it) {
    const QVertex u = *it;
    for (VertexId v = 0; v < nv; ++v) {
      if (!in[u][v]) continue;
      for (QVertex c : t.children[u]) {
        if (!has_neighbor_in(g, v, q.edge_label(u, c), in[c])) {
          in[u][v] = 0;
          break;
        }
      }
    }
  }
  for (QVertex u : top_down) {
    if (u == t.root) continue;
    const QVertex p = t.parent[u];
    for (VertexId v = 0; v < nv; ++v) {
      if (in[u][v] && !has_neighbor_in(g, v, q.edge_label(p, u), in[p])) in[u][v] = 0;
    }
  }

  std::vector<std::vector<VertexId>> out(n);
  for (QVertex u = 0; u < n; ++u) {
    for (VertexId v = 0; v < nv; ++v) {
      if (in[u][v]) out[u].push_back(v);
    }
  }
  return out;
}

std::unique_ptr<SeededStrategy> compose_index_swap(const std::string& order_source, const std::string& index_source,
                                                   StrategyOptions options) {
  OrderKind order;
  if (order_source == "gf") {
    order = OrderKind::kGraphflow;
  } else if (order_source == "tf") {
    order = OrderKind::kTurboflux;
  } else if (order_source == "dyn") {
    order = OrderKind::kTreeDfs;
  } else if (order_source == "sym") {
    order = OrderKind::kDynamic;
  } else {
    throw std::invalid_argument("no order source " + order_source);
  }
  IndexKind index;
  if (index_source == "gf") {
    index = IndexKind::kNone;
  } else if (index_source == "tf") {
    index = IndexKind::kSpanningTree;
  } else if (index_source == "sym") {
    index = IndexKind::kDag;
  } else {
    throw std::invalid_argument("no index source " + index_source);
  }
  std::string name = order_source + "@" + index_source;
  if (order_source == index_source) {
    name = order_source;
  } else if (index_source == "sym") {
    name = "o-" + order_source;
  }
  return std::make_unique<SeededStrategy>(name, index, order, options);
}

size_t CandidateReport::Row::total() const { return std::accumulate(c.begin(), c.end(), size_t{0}); }

const CandidateReport::Row* CandidateReport::find(const std::string& method) const {
  for (const Row& r : rows) {
    if (r.method == method) return &r;
  }
  return nullptr;
}

CandidateReport candidate_report(const QueryGraph& q, const LabeledGraph& g, const std::vector<std::string>& methods,
                                 StrategyOptions options) {
  CandidateReport report;
  for (const std::string& m : methods) {
    CandidateReport::Row row{m, {}, {}};
    if (m == "base") {
      row.c = baseline_candidates(q, g);
      report.rows.push_back(std::move(row));
      continue;
    }
    auto s = make_strategy(m, options);
    if (s->capabilities().tree_queries_only && classify(q) != QueryClass::kTree) continue;
    s->build(q, g);
    row.c = s->candidate_counts(g);
    const CandidateIndex* index = nullptr;
    if (auto* seeded = dynamic_cast<SeededStrategy*>(s.get())) index = seeded->index();
    if (index && index->forward()) {
      for (QVertex u = 0; u < q.vertex_count(); ++u) row.c_im.push_back(index->im_size(u));
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace csm
