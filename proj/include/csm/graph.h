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

#include <optional>
#include <span>
#include <tuple>
#include <vector>

#include "csm/common.h"

namespace csm {

struct Neighbor {
  VertexId id;
  Label label;  // edge label

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

struct Edge {
  VertexId src;
  VertexId dst;
  Label label;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/**
 * Undirected graph with labeled vertices and edges. Each adjacency list is
 * kept sorted by neighbor id so that neighbor sets can be merged.
 */
class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(std::vector<Label> vertex_labels);

  VertexId add_vertex(Label label);
  /** Changes a vertex label. The vertex must be isolated. */
  void set_label(VertexId v, Label label);

  void insert_edge(VertexId a, VertexId b, Label label);
  /** Removes e(a, b). If `label` is given it must match the stored label. */
  void delete_edge(VertexId a, VertexId b, std::optional<Label> label = std::nullopt);

  size_t vertex_count() const { return labels_.size(); }
  size_t edge_count() const { return edge_count_; }
  Label label(VertexId v) const { return labels_[v]; }
  const std::vector<Label>& labels() const { return labels_; }
  std::span<const Neighbor> adjacency(VertexId v) const { return adj_[v]; }
  size_t degree(VertexId v) const { return adj_[v].size(); }
  bool has_vertex(VertexId v) const { return v < labels_.size(); }

  std::optional<Label> edge_label(VertexId a, VertexId b) const;
  bool has_edge(VertexId a, VertexId b) const { return edge_label(a, b).has_value(); }
  bool has_edge(VertexId a, VertexId b, Label label) const {
    auto l = edge_label(a, b);
    return l && *l == label;
  }

  /** Neighbors of v reached over an edge labeled `elabel` that carry `vlabel`. */
  void neighbors(VertexId v, Label elabel, Label vlabel, std::vector<VertexId>& out) const;

  /** Every edge once, src < dst, sorted. */
  std::vector<Edge> edges() const;

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.labels_ == b.labels_ && a.adj_ == b.adj_;
  }

 private:
  void check_vertex(VertexId v) const;

  std::vector<Label> labels_;
  std::vector<std::vector<Neighbor>> adj_;
  size_t edge_count_ = 0;
};

enum class Op { kInsert, kDelete };

inline char op_char(Op op) { return op == Op::kInsert ? '+' : '-'; }

/** A single edge operation. Vertex labels are only used to auto-create
 *  endpoints that are not yet in the graph. */
struct EdgeUpdate {
  Op op = Op::kInsert;
  VertexId src = 0;
  VertexId dst = 0;
  Label label = 0;
  std::optional<Label> src_label;
  std::optional<Label> dst_label;

  uint64_t key() const { return edge_key(src, dst); }
};

/** Edge updates applied together. */
using Batch = std::vector<EdgeUpdate>;
using UpdateStream = std::vector<Batch>;

/** Orders a batch by (min endpoint, max endpoint); the order batches are applied in. */
void sort_batch(Batch& batch);

/** Creates every missing endpoint of `batch` in increasing id order.
 *  Returns the created ids. Throws kUnknownVertex when an id would leave a gap
 *  or no label is known for it. */
std::vector<VertexId> create_missing_vertices(LabeledGraph& g, const Batch& batch);

/** Applies an update whose endpoints already exist. */
void apply_update(LabeledGraph& g, const EdgeUpdate& u);

}  // namespace csm
