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

#include "csm/query.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <tuple>

namespace csm {

QueryGraph::QueryGraph(std::vector<Label> labels, std::vector<QueryEdge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
  const size_t n = labels_.size();
  if (n == 0) throw Error("empty query");
  edge_id_.assign(n * n, -1);
  adj_.assign(n, {});
  for (size_t k = 0; k < edges_.size(); ++k) {
    const QueryEdge& e = edges_[k];
    if (e.src >= n || e.dst >= n) throw Error("query edge references an unknown vertex");
    if (e.src == e.dst) throw Error("query self loop");
    if (edge_id_[e.src * n + e.dst] >= 0) throw Error("duplicate query edge");
    edge_id_[e.src * n + e.dst] = edge_id_[e.dst * n + e.src] = static_cast<int>(k);
    adj_[e.src].push_back(e.dst);
    adj_[e.dst].push_back(e.src);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
  auto dist = bfs_distances(*this, 0);
  for (size_t d : dist) {
    if (d == std::numeric_limits<size_t>::max()) throw Error("query is not connected");
  }
}

QueryGraph QueryGraph::from_file(const GraphFile& f) {
  std::vector<QueryEdge> edges;
  for (const Edge& e : f.edges) edges.push_back(QueryEdge{e.src, e.dst, e.label});
  return QueryGraph(f.vertex_labels, std::move(edges));
}

QueryGraph QueryGraph::load(const std::string& path) { return from_file(read_graph_file(path)); }

LabeledGraph QueryGraph::to_graph() const {
  LabeledGraph g(labels_);
  for (const QueryEdge& e : edges_) g.insert_edge(e.src, e.dst, e.label);
  return g;
}

const char* to_string(QueryClass c) {
  switch (c) {
    case QueryClass::kTree: return "tree";
    case QueryClass::kSparse: return "sparse";
    case QueryClass::kDense: return "dense";
  }
  return "?";
}

double average_degree(const QueryGraph& q) {
  return 2.0 * static_cast<double>(q.edge_count()) / static_cast<double>(q.vertex_count());
}

QueryClass classify(const QueryGraph& q) {
  if (q.edge_count() + 1 == q.vertex_count()) return QueryClass::kTree;
  return average_degree(q) <= 3.0 ? QueryClass::kSparse : QueryClass::kDense;
}

std::vector<size_t> bfs_distances(const QueryGraph& q, QVertex src) {
  std::vector<size_t> dist(q.vertex_count(), std::numeric_limits<size_t>::max());
  std::deque<QVertex> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    QVertex u = queue.front();
    queue.pop_front();
    for (QVertex w : q.neighbors(u)) {
      if (dist[w] == std::numeric_limits<size_t>::max()) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

size_t diameter(const QueryGraph& q) {
  size_t d = 0;
  for (QVertex u = 0; u < q.vertex_count(); ++u) {
    for (size_t x : bfs_distances(q, u)) d = std::max(d, x);
  }
  return d;
}

// ---------------------------------------------------------------------------
// Spanning trees

bool SpanningTree::is_tree_edge(const QueryGraph& q, int k) const {
  const QueryEdge& e = q.edge(k);
  return (parent[e.dst] == e.src && e.dst != root) || (parent[e.src] == e.dst && e.src != root);
}

std::vector<QVertex> SpanningTree::path_from_root(QVertex u) const {
  std::vector<QVertex> path{u};
  while (u != root) {
    u = parent[u];
    path.push_back(u);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<QVertex> SpanningTree::subtree(QVertex u) const {
  std::vector<QVertex> out{u};
  for (size_t i = 0; i < out.size(); ++i) {
    for (QVertex c : children[out[i]]) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<QVertex> SpanningTree::dfs_order() const {
  std::vector<QVertex> order;
  std::vector<QVertex> stack{root};
  while (!stack.empty()) {
    QVertex u = stack.back();
    stack.pop_back();
    order.push_back(u);
    for (auto it = children[u].rbegin(); it != children[u].rend(); ++it) stack.push_back(*it);
  }
  return order;
}

SpanningTree make_tree(const QueryGraph& q, QVertex root, std::vector<QVertex> parent) {
  SpanningTree t;
  t.root = root;
  t.parent = std::move(parent);
  t.parent[root] = root;
  t.children.assign(q.vertex_count(), {});
  for (QVertex u = 0; u < q.vertex_count(); ++u) {
    if (u != root) t.children[t.parent[u]].push_back(u);
  }
  for (auto& c : t.children) std::sort(c.begin(), c.end());
  for (size_t k = 0; k < q.edge_count(); ++k) {
    if (!t.is_tree_edge(q, static_cast<int>(k))) t.non_tree_edges.push_back(static_cast<int>(k));
  }
  return t;
}

SpanningTree dfs_tree(const QueryGraph& q, QVertex root) {
  std::vector<QVertex> parent(q.vertex_count(), kNoVertex);
  std::vector<bool> seen(q.vertex_count(), false);
  // Recursive DFS over ascending neighbor ids.
  auto visit = [&](auto&& self, QVertex u) -> void {
    seen[u] = true;
    for (QVertex w : q.neighbors(u)) {
      if (!seen[w]) {
        parent[w] = u;
        self(self, w);
      }
    }
  };
  visit(visit, root);
  return make_tree(q, root, std::move(parent));
}

// ---------------------------------------------------------------------------
// DAG

namespace {

void collect_paths(const std::vector<std::vector<QVertex>>& next, QVertex u, bool stop_at_empty,
                   QVertex target, std::vector<QVertex>& path,
                   std::vector<std::vector<QVertex>>& out) {
  path.push_back(u);
  if (stop_at_empty ? next[u].empty() : u == target) {
    out.push_back(path);
  } else {
    for (QVertex w : next[u]) collect_paths(next, w, stop_at_empty, target, path, out);
  }
  path.pop_back();
}

}  // namespace

std::vector<std::vector<QVertex>> QueryDag::paths_from_root(QVertex u) const {
  // Walk parents from u up to the root, then reverse each path.
  std::vector<std::vector<QVertex>> out;
  std::vector<QVertex> path;
  collect_paths(parents, u, false, root, path, out);
  for (auto& p : out) std::reverse(p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<QVertex>> QueryDag::paths_to_sinks(QVertex u) const {
  std::vector<std::vector<QVertex>> out;
  std::vector<QVertex> path;
  collect_paths(children, u, true, kNoVertex, path, out);
  return out;
}

QueryDag make_dag(const QueryGraph& q, QVertex root) {
  const size_t n = q.vertex_count();
  QueryDag d;
  d.root = root;
  d.position.assign(n, n);
  d.parents.assign(n, {});
  d.children.assign(n, {});
  std::deque<QVertex> queue{root};
  d.position[root] = 0;
  d.order.push_back(root);
  while (!queue.empty()) {
    QVertex u = queue.front();
    queue.pop_front();
    for (QVertex w : q.neighbors(u)) {
      if (d.position[w] == n) {
        d.position[w] = d.order.size();
        d.order.push_back(w);
        queue.push_back(w);
      }
    }
  }
  for (const QueryEdge& e : q.edges()) {
    QVertex a = e.src, b = e.dst;
    if (d.position[a] > d.position[b]) std::swap(a, b);
    d.children[a].push_back(b);
    d.parents[b].push_back(a);
  }
  for (auto& v : d.parents) std::sort(v.begin(), v.end());
  for (auto& v : d.children) std::sort(v.begin(), v.end());
  // Longest path; `order` is a topological order.
  std::vector<size_t> depth(n, 0);
  for (QVertex u : d.order) {
    for (QVertex c : d.children[u]) depth[c] = std::max(depth[c], depth[u] + 1);
    d.height = std::max(d.height, depth[u]);
  }
  return d;
}

QueryDag build_dag(const QueryGraph& q) {
  QueryDag best = make_dag(q, 0);
  for (QVertex r = 1; r < q.vertex_count(); ++r) {
    QueryDag d = make_dag(q, r);
    if (d.height > best.height) best = std::move(d);
  }
  return best;
}

SpanningTree bfs_tree(const QueryGraph& q, const QueryDag& dag) {
  std::vector<QVertex> parent(q.vertex_count(), kNoVertex);
  // The discoverer of w is its parent with the smallest BFS position.
  for (QVertex w = 0; w < q.vertex_count(); ++w) {
    if (w == dag.root) continue;
    QVertex best = dag.parents[w].front();
    for (QVertex p : dag.parents[w]) {
      if (dag.position[p] < dag.position[best]) best = p;
    }
    parent[w] = best;
  }
  return make_tree(q, dag.root, std::move(parent));
}

// ---------------------------------------------------------------------------
// Greedy spanning tree

std::vector<size_t> relation_sizes(const QueryGraph& q, const LabeledGraph& g) {
  std::vector<size_t> sizes(q.edge_count(), 0);
  for (const Edge& e : g.edges()) {
    const Label la = g.label(e.src), lb = g.label(e.dst);
    for (size_t k = 0; k < q.edge_count(); ++k) {
      const QueryEdge& qe = q.edge(k);
      if (qe.label != e.label) continue;
      const Label ls = q.label(qe.src), ld = q.label(qe.dst);
      if (ls == la && ld == lb) ++sizes[k];
      if (ls == lb && ld == la) ++sizes[k];
    }
  }
  return sizes;
}

std::vector<size_t> label_frequencies(const LabeledGraph& g, Label max_label) {
  std::vector<size_t> freq(static_cast<size_t>(max_label) + 1, 0);
  for (Label l : g.labels()) {
    if (l <= max_label) ++freq[l];
  }
  return freq;
}

SpanningTree build_spanning_tree(const QueryGraph& q, const LabeledGraph& g) {
  const size_t n = q.vertex_count();
  if (q.edge_count() == 0) return make_tree(q, 0, std::vector<QVertex>(n, 0));
  const auto rel = relation_sizes(q, g);
  const auto freq = label_frequencies(g, *std::max_element(q.labels().begin(), q.labels().end()));

  auto edge_rank = [&](size_t k) {
    const QueryEdge& e = q.edge(k);
    return std::make_tuple(rel[k], std::min(e.src, e.dst), std::max(e.src, e.dst));
  };
  size_t first = 0;
  for (size_t k = 1; k < q.edge_count(); ++k) {
    if (edge_rank(k) < edge_rank(first)) first = k;
  }
  const QueryEdge& fe = q.edge(first);
  QVertex root = fe.src;
  QVertex other = fe.dst;
  if (std::make_pair(freq[q.label(other)], other) < std::make_pair(freq[q.label(root)], root)) {
    root = other;
  }

  std::vector<size_t> joined(n, n);  // rank at which a vertex entered the tree
  std::vector<QVertex> parent(n, kNoVertex);
  joined[root] = 0;
  for (size_t step = 1; step < n; ++step) {
    // (relation size, tree-side join rank, new vertex) of the best incident edge.
    std::tuple<size_t, size_t, QVertex> best{std::numeric_limits<size_t>::max(), n, n};
    QVertex best_parent = kNoVertex;
    for (size_t k = 0; k < q.edge_count(); ++k) {
      const QueryEdge& e = q.edge(k);
      bool in_src = joined[e.src] < n, in_dst = joined[e.dst] < n;
      if (in_src == in_dst) continue;
      QVertex inside = in_src ? e.src : e.dst;
      QVertex outside = e.other(inside);
      std::tuple<size_t, size_t, QVertex> cand{rel[k], joined[inside], outside};
      if (cand < best) {
        best = cand;
        best_parent = inside;
      }
    }
    QVertex added = std::get<2>(best);
    parent[added] = best_parent;
    joined[added] = step;
  }
  return make_tree(q, root, std::move(parent));
}

}  // namespace csm
