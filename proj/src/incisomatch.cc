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

#include "csm/incisomatch.h"

#include <algorithm>
#include <deque>
#include <iterator>

#include "csm/orders.h"

namespace csm {

namespace {

std::vector<size_t> hops_from(const LabeledGraph& g, VertexId src, size_t radius) {
  std::vector<size_t> dist(g.vertex_count(), SIZE_MAX);
  std::deque<VertexId> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    if (dist[v] == radius) continue;
    for (const Neighbor& n : g.adjacency(v)) {
      if (dist[n.id] == SIZE_MAX) {
        dist[n.id] = dist[v] + 1;
        queue.push_back(n.id);
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<VertexId> shared_ball(const LabeledGraph& g, VertexId a, VertexId b, size_t radius) {
  auto da = hops_from(g, a, radius), db = hops_from(g, b, radius);
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (da[v] <= radius && db[v] <= radius) out.push_back(v);
  }
  return out;
}

Capabilities IncIsoMatchStrategy::capabilities() const {
  Capabilities c;
  c.batch = false;
  c.early_termination = false;
  return c;
}

void IncIsoMatchStrategy::build(const QueryGraph& q, const LabeledGraph&) {
  query_ = &q;
  radius_ = diameter(q);
  const QueryEdge& e = q.edge(0);
  order_ = MatchingOrder(q, graphflow_order(q, e.src, e.dst));
}

void IncIsoMatchStrategy::find_matches(const LabeledGraph& g, const DeltaPlan&,
                                       std::span<const EdgeUpdate> batch, EnumContext& ctx) {
  const QueryGraph& q = *query_;
  for (const EdgeUpdate& u : batch) {
    // g holds the edge in both cases: after an insertion, before a deletion.
    const auto ball = shared_ball(g, u.src, u.dst, radius_);
    std::vector<VertexId> local(g.vertex_count(), kNoVertex);
    std::vector<Label> labels;
    for (VertexId v : ball) {
      local[v] = static_cast<VertexId>(labels.size());
      labels.push_back(g.label(v));
    }
    LabeledGraph with(labels);
    for (VertexId v : ball) {
      for (const Neighbor& n : g.adjacency(v)) {
        if (v < n.id && local[n.id] != kNoVertex) with.insert_edge(local[v], local[n.id], n.label);
      }
    }
    LabeledGraph without = with;
    without.delete_edge(local[u.src], local[u.dst]);

    // Static matching on both versions of the neighborhood. Both runs use the
    // same order over sorted adjacency, so the matches without the edge come
    // out as a subsequence of the matches with it and the difference is a
    // single merge pass. The pass checks that every skipped match is the next
    // stored one and every reported match uses the edge.
    EnumerationConfig cfg;
    cfg.semantics = ctx.config().semantics;
    cfg.deadline = ctx.config().deadline;
    const size_t qn = q.vertex_count();
    auto match_all = [&](const LabeledGraph& h, const MatchCallback& sink) {
      Counters local_counters;
      EnumContext local_ctx(cfg, local_counters, sink);
      const PartialMatch empty(qn, kNoVertex);
      const EnumStatus st = enumerate(q, order_, GraphView(q, h), empty, Exclusion{}, local_ctx);
      ctx.counters().emp += local_counters.emp;
      ctx.counters().vis += local_counters.vis;
      ctx.counters().recursions += local_counters.recursions;
      return st != EnumStatus::kBudgetExceeded;
    };
    std::vector<VertexId> rows;
    const bool done_without =
        match_all(without, [&](std::span<const VertexId> m) { rows.insert(rows.end(), m.begin(), m.end()); });
    const VertexId la = local[u.src], lb = local[u.dst];
    auto uses_edge = [&](std::span<const VertexId> m) {
      for (const QueryEdge& e : q.edges()) {
        if ((m[e.src] == la && m[e.dst] == lb) || (m[e.src] == lb && m[e.dst] == la)) return true;
      }
      return false;
    };
    size_t next = 0;
    bool diverged = false;
    Match out(qn);
    const bool done = done_without && match_all(with, [&](std::span<const VertexId> m) {
      if (next < rows.size() && std::equal(m.begin(), m.end(), rows.begin() + next)) {
        next += qn;
        return;
      }
      if (!uses_edge(m)) diverged = true;
      for (size_t c = 0; c < qn; ++c) out[c] = ball[m[c]];
      ctx.emit(out);
    });
    if (done && (diverged || next != rows.size())) throw Error("neighborhood enumerations diverged");
    if (!done) {
      ctx.stop(EnumStatus::kBudgetExceeded);
      return;
    }
  }
}

}  // namespace csm
