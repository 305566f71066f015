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

#include "csm/candidate_index.h"

#include <algorithm>

namespace csm {

CandidateIndex::CandidateIndex(const QueryGraph& q, const std::vector<std::pair<QVertex, QVertex>>& arcs,
                               bool forward)
    : q_(q), forward_(forward) {
  const size_t nq = q.vertex_count();
  in_arcs_.assign(nq, {});
  out_arcs_.assign(nq, {});
  for (auto [p, c] : arcs) {
    if (!q.adjacent(p, c)) throw Error("index arc is not a query edge");
    Arc a{p, c, q.edge_label(p, c), in_arcs_[c].size(), out_arcs_[p].size()};
    in_arcs_[c].push_back(arcs_.size());
    out_arcs_[p].push_back(arcs_.size());
    arcs_.push_back(a);
  }
  im_.assign(nq, {});
  c_.assign(nq, {});
  fcnt_.assign(nq, {});
  bcnt_.assign(nq, {});
  fnz_.assign(nq, {});
  bnz_.assign(nq, {});
  im_size_.assign(nq, 0);
  c_size_.assign(nq, 0);
}

std::vector<std::pair<QVertex, QVertex>> CandidateIndex::tree_arcs(const SpanningTree& t) {
  std::vector<std::pair<QVertex, QVertex>> arcs;
  for (QVertex u : t.dfs_order()) {
    for (QVertex c : t.children[u]) arcs.emplace_back(u, c);
  }
  return arcs;
}

std::vector<std::pair<QVertex, QVertex>> CandidateIndex::dag_arcs(const QueryDag& d) {
  std::vector<std::pair<QVertex, QVertex>> arcs;
  for (QVertex u : d.order) {
    for (QVertex c : d.children[u]) arcs.emplace_back(u, c);
  }
  return arcs;
}

void CandidateIndex::ensure(size_t n) {
  if (n <= n_) return;
  for (QVertex u = 0; u < q_.vertex_count(); ++u) {
    im_[u].resize(n, 0);
    c_[u].resize(n, 0);
    fcnt_[u].resize(n * in_arcs_[u].size(), 0);
    bcnt_[u].resize(n * out_arcs_[u].size(), 0);
    fnz_[u].resize(n, 0);
    bnz_[u].resize(n, 0);
  }
  n_ = n;
}

void CandidateIndex::build(const LabeledGraph& g) {
  ensure(g.vertex_count());
  for (QVertex u = 0; u < q_.vertex_count(); ++u) {
    if (needed_forward(u) != 0) continue;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (g.label(v) == q_.label(u)) fwd_add_.emplace_back(u, v);
    }
  }
  drain(g);
}

void CandidateIndex::add_vertex(const LabeledGraph& g, VertexId v) {
  ensure(g.vertex_count());
  for (QVertex u = 0; u < q_.vertex_count(); ++u) {
    if (needed_forward(u) == 0 && g.label(v) == q_.label(u)) fwd_add_.emplace_back(u, v);
  }
  drain(g);
}

void CandidateIndex::relabel_vertex(const LabeledGraph& g, VertexId v) {
  ensure(g.vertex_count());
  for (QVertex u = 0; u < q_.vertex_count(); ++u) {
    if (im_[u][v] && g.label(v) != q_.label(u)) deactivate_im(g, u, v);
  }
  drain(g);
  add_vertex(g, v);
}

// Membership changes. Each one adjusts the counters of the neighbors right
// away and queues the pairs whose condition may have flipped; the queues
// re-check on pop, so duplicates are harmless.

void CandidateIndex::bump_forward(QVertex c, VertexId v, size_t slot, int delta) {
  const size_t np = in_arcs_[c].size();
  uint32_t& cnt = fcnt_[c][v * np + slot];
  if (delta > 0) {
    if (cnt++ == 0 && ++fnz_[c][v] == np && !im_[c][v]) fwd_add_.emplace_back(c, v);
  } else {
    if (--cnt == 0 && fnz_[c][v]-- == np && im_[c][v]) fwd_rem_.emplace_back(c, v);
  }
}

void CandidateIndex::bump_backward(QVertex p, VertexId v, size_t slot, int delta) {
  const size_t nc = out_arcs_[p].size();
  uint32_t& cnt = bcnt_[p][v * nc + slot];
  if (delta > 0) {
    if (cnt++ == 0 && ++bnz_[p][v] == nc && im_[p][v] && !c_[p][v]) bwd_add_.emplace_back(p, v);
  } else {
    if (--cnt == 0 && bnz_[p][v]-- == nc && c_[p][v]) bwd_rem_.emplace_back(p, v);
  }
}

void CandidateIndex::activate_im(const LabeledGraph& g, QVertex u, VertexId v) {
  im_[u][v] = 1;
  ++im_size_[u];
  if (bnz_[u][v] == out_arcs_[u].size()) bwd_add_.emplace_back(u, v);
  if (!forward_) return;
  for (size_t ai : out_arcs_[u]) {
    const Arc& a = arcs_[ai];
    const Label cl = q_.label(a.child);
    for (const Neighbor& nb : g.adjacency(v)) {
      if (nb.label == a.label && g.label(nb.id) == cl) bump_forward(a.child, nb.id, a.parent_slot, +1);
    }
  }
}

void CandidateIndex::deactivate_im(const LabeledGraph& g, QVertex u, VertexId v) {
  im_[u][v] = 0;
  --im_size_[u];
  if (c_[u][v]) bwd_rem_.emplace_back(u, v);
  if (!forward_) return;
  for (size_t ai : out_arcs_[u]) {
    const Arc& a = arcs_[ai];
    const Label cl = q_.label(a.child);
    for (const Neighbor& nb : g.adjacency(v)) {
      if (nb.label == a.label && g.label(nb.id) == cl) bump_forward(a.child, nb.id, a.parent_slot, -1);
    }
  }
}

void CandidateIndex::activate_c(const LabeledGraph& g, QVertex u, VertexId v) {
  c_[u][v] = 1;
  ++c_size_[u];
  for (size_t ai : in_arcs_[u]) {
    const Arc& a = arcs_[ai];
    const Label pl = q_.label(a.parent);
    for (const Neighbor& nb : g.adjacency(v)) {
      if (nb.label == a.label && g.label(nb.id) == pl) bump_backward(a.parent, nb.id, a.child_slot, +1);
    }
  }
}

void CandidateIndex::deactivate_c(const LabeledGraph& g, QVertex u, VertexId v) {
  c_[u][v] = 0;
  --c_size_[u];
  for (size_t ai : in_arcs_[u]) {
    const Arc& a = arcs_[ai];
    const Label pl = q_.label(a.parent);
    for (const Neighbor& nb : g.adjacency(v)) {
      if (nb.label == a.label && g.label(nb.id) == pl) bump_backward(a.parent, nb.id, a.child_slot, -1);
    }
  }
}

void CandidateIndex::drain(const LabeledGraph& g) {
  // Forward work first: C(u) depends on C_im(u) but not the other way round.
  while (!fwd_add_.empty() || !fwd_rem_.empty()) {
    while (!fwd_rem_.empty()) {
      auto [u, v] = fwd_rem_.back();
      fwd_rem_.pop_back();
      if (im_[u][v] && fnz_[u][v] < needed_forward(u)) deactivate_im(g, u, v);
    }
    while (!fwd_add_.empty()) {
      auto [u, v] = fwd_add_.back();
      fwd_add_.pop_back();
      if (!im_[u][v] && fnz_[u][v] >= needed_forward(u) && g.label(v) == q_.label(u)) activate_im(g, u, v);
    }
  }
  while (!bwd_add_.empty() || !bwd_rem_.empty()) {
    while (!bwd_rem_.empty()) {
      auto [u, v] = bwd_rem_.back();
      bwd_rem_.pop_back();
      if (c_[u][v] && (!im_[u][v] || bnz_[u][v] < out_arcs_[u].size())) deactivate_c(g, u, v);
    }
    while (!bwd_add_.empty()) {
      auto [u, v] = bwd_add_.back();
      bwd_add_.pop_back();
      if (!c_[u][v] && im_[u][v] && bnz_[u][v] == out_arcs_[u].size()) activate_c(g, u, v);
    }
  }
}

void CandidateIndex::edge_delta(const LabeledGraph& g, std::span<const EdgeUpdate> edges, int delta) {
  ensure(g.vertex_count());
  // Snapshot the counter changes caused by the edges themselves before any
  // membership moves; members that join later count the edges when they scan
  // their adjacency.
  struct Bump {
    bool forward;
    QVertex u;
    VertexId v;
    size_t slot;
  };
  std::vector<Bump> bumps;
  for (const EdgeUpdate& e : edges) {
    for (const Arc& arc : arcs_) {
      if (arc.label != e.label) continue;
      const Label pl = q_.label(arc.parent), cl = q_.label(arc.child);
      for (auto [x, y] : {std::pair{e.src, e.dst}, std::pair{e.dst, e.src}}) {
        if (g.label(x) != pl || g.label(y) != cl) continue;
        if (forward_ && im_[arc.parent][x]) bumps.push_back({true, arc.child, y, arc.parent_slot});
        if (c_[arc.child][y]) bumps.push_back({false, arc.parent, x, arc.child_slot});
      }
    }
  }
  for (const Bump& bp : bumps) {
    if (bp.forward) {
      bump_forward(bp.u, bp.v, bp.slot, delta);
    } else {
      bump_backward(bp.u, bp.v, bp.slot, delta);
    }
  }
  drain(g);
}

void CandidateIndex::insert_edge(const LabeledGraph& g, VertexId a, VertexId b, Label label) {
  const EdgeUpdate e{Op::kInsert, a, b, label, {}, {}};
  edge_delta(g, {&e, 1}, +1);
}

void CandidateIndex::delete_edge(const LabeledGraph& g, VertexId a, VertexId b, Label label) {
  const EdgeUpdate e{Op::kDelete, a, b, label, {}, {}};
  edge_delta(g, {&e, 1}, -1);
}

void CandidateIndex::apply_batch(const LabeledGraph& g, std::span<const EdgeUpdate> batch, Op op) {
  edge_delta(g, batch, op == Op::kInsert ? +1 : -1);
}

std::vector<VertexId> CandidateIndex::candidates(QVertex u) const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < n_; ++v) {
    if (c_[u][v]) out.push_back(v);
  }
  return out;
}

std::vector<VertexId> CandidateIndex::im_candidates(QVertex u) const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < n_; ++v) {
    if (im_[u][v]) out.push_back(v);
  }
  return out;
}

bool CandidateIndex::same_state(const CandidateIndex& o) const {
  if (n_ != o.n_ || arcs_.size() != o.arcs_.size()) return false;
  return im_ == o.im_ && c_ == o.c_ && fcnt_ == o.fcnt_ && bcnt_ == o.bcnt_ && fnz_ == o.fnz_ &&
         bnz_ == o.bnz_ && im_size_ == o.im_size_ && c_size_ == o.c_size_;
}

// ---------------------------------------------------------------------------

void IndexedView::extensions(QVertex from_u, VertexId from_v, QVertex to_u,
                             std::vector<VertexId>& out) const {
  out.clear();
  const Label el = q_.edge_label(from_u, to_u);
  for (const Neighbor& nb : g_.adjacency(from_v)) {
    if (nb.label == el && index_.in_c(to_u, nb.id)) out.push_back(nb.id);
  }
}

void IndexedView::initial_candidates(QVertex u, std::vector<VertexId>& out) const {
  out = index_.candidates(u);
}

}  // namespace csm
