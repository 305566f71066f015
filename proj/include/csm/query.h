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
#include <string>
#include <vector>

#include "csm/graph.h"
#include "csm/graph_io.h"

namespace csm {

/** Query edge; its position in the query's edge list is the canonical index
 *  used to order incremental match components. */
struct QueryEdge {
  QVertex src;
  QVertex dst;
  Label label;

  QVertex other(QVertex u) const { return u == src ? dst : src; }
};

/** Small connected labeled query graph. */
class QueryGraph {
 public:
  QueryGraph() = default;
  /** Throws Error if disconnected, or on duplicate edges / self loops. */
  QueryGraph(std::vector<Label> labels, std::vector<QueryEdge> edges);

  static QueryGraph from_file(const GraphFile& f);
  static QueryGraph load(const std::string& path);

  size_t vertex_count() const { return labels_.size(); }
  size_t edge_count() const { return edges_.size(); }
  Label label(QVertex u) const { return labels_[u]; }
  const std::vector<Label>& labels() const { return labels_; }
  const QueryEdge& edge(size_t k) const { return edges_[k]; }
  std::span<const QueryEdge> edges() const { return edges_; }
  /** Canonical index of e(u, v), or -1. */
  int edge_id(QVertex u, QVertex v) const { return edge_id_[u * labels_.size() + v]; }
  bool adjacent(QVertex u, QVertex v) const { return edge_id(u, v) >= 0; }
  Label edge_label(QVertex u, QVertex v) const { return edges_[edge_id(u, v)].label; }
  std::span<const QVertex> neighbors(QVertex u) const { return adj_[u]; }
  size_t degree(QVertex u) const { return adj_[u].size(); }

  LabeledGraph to_graph() const;

 private:
  std::vector<Label> labels_;
  std::vector<QueryEdge> edges_;
  std::vector<int> edge_id_;
  std::vector<std::vector<QVertex>> adj_;
};

enum class QueryClass { kTree, kSparse, kDense };

const char* to_string(QueryClass c);
/** tree iff |E| = |V| - 1; otherwise sparse iff average degree <= 3. */
QueryClass classify(const QueryGraph& q);
double average_degree(const QueryGraph& q);
/** Longest shortest path between two query vertices. */
size_t diameter(const QueryGraph& q);
/** Hop distances from `src`. */
std::vector<size_t> bfs_distances(const QueryGraph& q, QVertex src);

/** Rooted spanning tree of a query. */
struct SpanningTree {
  QVertex root = 0;
  std::vector<QVertex> parent;  // parent[root] == root
  std::vector<std::vector<QVertex>> children;  // ascending
  std::vector<int> non_tree_edges;  // canonical edge indices

  bool is_tree_edge(const QueryGraph& q, int k) const;
  /** root = p_0, ..., p_m = u. */
  std::vector<QVertex> path_from_root(QVertex u) const;
  /** Vertices of the subtree rooted at u, ascending. */
  std::vector<QVertex> subtree(QVertex u) const;
  /** DFS preorder from the root, children visited in ascending id order. */
  std::vector<QVertex> dfs_order() const;
};

/** Spanning tree rooted at `root` built from the parent array. */
SpanningTree make_tree(const QueryGraph& q, QVertex root, std::vector<QVertex> parent);
/** DFS tree of a query from `root`; for tree queries this is the query itself. */
SpanningTree dfs_tree(const QueryGraph& q, QVertex root);

/** Query edges turned into a rooted DAG. */
struct QueryDag {
  QVertex root = 0;
  std::vector<QVertex> order;               // BFS order, order[0] == root
  std::vector<size_t> position;             // inverse of `order`
  std::vector<std::vector<QVertex>> parents;   // ascending
  std::vector<std::vector<QVertex>> children;  // ascending
  size_t height = 0;                        // edges on the longest root path

  bool is_sink(QVertex u) const { return children[u].empty(); }
  /** Every directed path from the root to u. */
  std::vector<std::vector<QVertex>> paths_from_root(QVertex u) const;
  /** Every directed path from u to a sink. */
  std::vector<std::vector<QVertex>> paths_to_sinks(QVertex u) const;
};

/** BFS DAG from `root`: each edge points from the earlier visited endpoint. */
QueryDag make_dag(const QueryGraph& q, QVertex root);
/** BFS DAG whose root maximizes the DAG height (ties: smaller id). */
QueryDag build_dag(const QueryGraph& q);
/** BFS tree of a DAG: every vertex hangs off the parent that discovered it. */
SpanningTree bfs_tree(const QueryGraph& q, const QueryDag& dag);

/** Ordered data edge count of each query edge's relation: pairs (v, v')
 *  with labels matching (src, dst) and an edge labeled like the query edge. */
std::vector<size_t> relation_sizes(const QueryGraph& q, const LabeledGraph& g);

/**
 * Spanning tree grown greedily: the root is the rarer-labeled endpoint of the
 * query edge with the smallest relation; afterwards the incident edge with the
 * smallest relation is added. Ties go to the edge whose tree-side endpoint
 * joined the tree first, then to the smaller new vertex id.
 */
SpanningTree build_spanning_tree(const QueryGraph& q, const LabeledGraph& g);

/** Number of data vertices per vertex label. */
std::vector<size_t> label_frequencies(const LabeledGraph& g, Label max_label);

}  // namespace csm
