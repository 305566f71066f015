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

// Candidate index over a directed version of the query (a rooted spanning
// tree or a rooted DAG).
//
// For every query vertex u two nested candidate sets are kept:
//   C_im(u): label matches with a neighbor in C_im(p) for every parent p;
//   C(u):    members of C_im(u) with a neighbor in C(c) for every child c.
// Per (u, v) the index counts, for each parent slot, the neighbors of v in
// C_im(parent), and for each child slot the neighbors of v in C(child), plus
// how many of those counts are non-zero. Edge updates adjust the counts and
// push the affected (u, v) pairs through work queues until both sets settle.
//
// With forward propagation disabled C_im(u) is simply the label matches of u.

#pragma once

#include <span>
#include <utility>
#include <vector>

#include "csm/enumerator.h"
#include "csm/graph.h"
#include "csm/query.h"

namespace csm {

class CandidateIndex {
 public:
  struct Arc {
    QVertex parent;
    QVertex child;
    Label label;
    size_t parent_slot;  // position of `parent` in parents(child)
    size_t child_slot;   // position of `child` in children(parent)
  };

  /** `arcs` are (parent, child) pairs covering a subset of the query edges. */
  CandidateIndex(const QueryGraph& q, const std::vector<std::pair<QVertex, QVertex>>& arcs, bool forward);

  static std::vector<std::pair<QVertex, QVertex>> tree_arcs(const SpanningTree& t);
  static std::vector<std::pair<QVertex, QVertex>> dag_arcs(const QueryDag& d);

  void build(const LabeledGraph& g);
  void add_vertex(const LabeledGraph& g, VertexId v);
  /** v is isolated and its label changed. */
  void relabel_vertex(const LabeledGraph& g, VertexId v);
  /** g already contains e(a, b). */
  void insert_edge(const LabeledGraph& g, VertexId a, VertexId b, Label label);
  /** g no longer contains e(a, b). */
  void delete_edge(const LabeledGraph& g, VertexId a, VertexId b, Label label);
  /** Whole single-sign batch; g already reflects all of it. Applying the
   *  edges one at a time would count later batch edges twice. */
  void apply_batch(const LabeledGraph& g, std::span<const EdgeUpdate> batch, Op op);

  bool in_im(QVertex u, VertexId v) const { return v < n_ && im_[u][v]; }
  bool in_c(QVertex u, VertexId v) const { return v < n_ && c_[u][v]; }
  size_t im_size(QVertex u) const { return im_size_[u]; }
  size_t size(QVertex u) const { return c_size_[u]; }
  std::vector<VertexId> candidates(QVertex u) const;
  std::vector<VertexId> im_candidates(QVertex u) const;

  std::span<const size_t> parent_arcs(QVertex u) const { return in_arcs_[u]; }
  std::span<const size_t> child_arcs(QVertex u) const { return out_arcs_[u]; }
  const Arc& arc(size_t i) const { return arcs_[i]; }
  size_t arc_count() const { return arcs_.size(); }
  bool forward() const { return forward_; }

  /** Neighbors of v in C_im(parent) over parent arc `slot` of u. */
  uint32_t forward_count(QVertex u, VertexId v, size_t slot) const {
    return fcnt_[u][v * in_arcs_[u].size() + slot];
  }
  /** Neighbors of v in C(child) over child arc `slot` of u. */
  uint32_t backward_count(QVertex u, VertexId v, size_t slot) const {
    return bcnt_[u][v * out_arcs_[u].size() + slot];
  }

  /** Same sets and counters (for rebuild comparisons). */
  bool same_state(const CandidateIndex& o) const;

 private:
  using Item = std::pair<QVertex, VertexId>;

  void ensure(size_t n);
  size_t needed_forward(QVertex u) const { return forward_ ? in_arcs_[u].size() : 0; }
  void activate_im(const LabeledGraph& g, QVertex u, VertexId v);
  void activate_c(const LabeledGraph& g, QVertex u, VertexId v);
  void deactivate_im(const LabeledGraph& g, QVertex u, VertexId v);
  void deactivate_c(const LabeledGraph& g, QVertex u, VertexId v);
  void bump_forward(QVertex c, VertexId v, size_t slot, int delta);
  void bump_backward(QVertex p, VertexId v, size_t slot, int delta);
  void drain(const LabeledGraph& g);
  void edge_delta(const LabeledGraph& g, std::span<const EdgeUpdate> edges, int delta);

  const QueryGraph& q_;
  bool forward_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<size_t>> in_arcs_, out_arcs_;
  size_t n_ = 0;
  std::vector<std::vector<uint8_t>> im_, c_;
  std::vector<size_t> im_size_, c_size_;
  std::vector<std::vector<uint32_t>> fcnt_, bcnt_;
  std::vector<std::vector<uint32_t>> fnz_, bnz_;
  std::vector<Item> fwd_add_, bwd_add_, fwd_rem_, bwd_rem_;
};

/** Relation view restricted to C(u) of an index. */
class IndexedView : public RelationView {
 public:
  IndexedView(const QueryGraph& q, const LabeledGraph& g, const CandidateIndex& index)
      : q_(q), g_(g), index_(index) {}
  void extensions(QVertex from_u, VertexId from_v, QVertex to_u,
                  std::vector<VertexId>& out) const override;
  void initial_candidates(QVertex u, std::vector<VertexId>& out) const override;
  bool admits(QVertex u, VertexId v) const override { return index_.in_c(u, v); }

 private:
  const QueryGraph& q_;
  const LabeledGraph& g_;
  const CandidateIndex& index_;
};

}  // namespace csm
