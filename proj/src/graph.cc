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

#include "csm/graph.h"

#include <algorithm>
#include <map>
#include <string>

namespace csm {

namespace {

auto find_neighbor(const std::vector<Neighbor>& adj, VertexId v) {
  return std::lower_bound(adj.begin(), adj.end(), v,
                          [](const Neighbor& n, VertexId id) { return n.id < id; });
}

std::string edge_str(VertexId a, VertexId b) {
  return "e(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

LabeledGraph::LabeledGraph(std::vector<Label> vertex_labels)
    : labels_(std::move(vertex_labels)), adj_(labels_.size()) {}

VertexId LabeledGraph::add_vertex(Label label) {
  labels_.push_back(label);
  adj_.emplace_back();
  return static_cast<VertexId>(labels_.size() - 1);
}

void LabeledGraph::set_label(VertexId v, Label label) {
  check_vertex(v);
  if (!adj_[v].empty()) throw Error("relabeling a vertex that still has edges");
  labels_[v] = label;
}

void LabeledGraph::check_vertex(VertexId v) const {
  if (v >= labels_.size()) {
    throw GraphError(GraphError::Kind::kUnknownVertex, "unknown vertex " + std::to_string(v));
  }
}

void LabeledGraph::insert_edge(VertexId a, VertexId b, Label label) {
  check_vertex(a);
  check_vertex(b);
  if (a == b) throw GraphError(GraphError::Kind::kSelfLoop, "self loop on " + std::to_string(a));
  auto it = find_neighbor(adj_[a], b);
  if (it != adj_[a].end() && it->id == b) {
    throw GraphError(GraphError::Kind::kDuplicateEdge, "duplicate edge " + edge_str(a, b));
  }
  adj_[a].insert(it, Neighbor{b, label});
  adj_[b].insert(find_neighbor(adj_[b], a), Neighbor{a, label});
  ++edge_count_;
}

void LabeledGraph::delete_edge(VertexId a, VertexId b, std::optional<Label> label) {
  check_vertex(a);
  check_vertex(b);
  auto it = find_neighbor(adj_[a], b);
  if (it == adj_[a].end() || it->id != b || (label && it->label != *label)) {
    throw GraphError(GraphError::Kind::kMissingEdge, "missing edge " + edge_str(a, b));
  }
  adj_[a].erase(it);
  adj_[b].erase(find_neighbor(adj_[b], a));
  --edge_count_;
}

std::optional<Label> LabeledGraph::edge_label(VertexId a, VertexId b) const {
  if (a >= labels_.size() || b >= labels_.size()) return std::nullopt;
  // Search the shorter list.
  if (adj_[a].size() > adj_[b].size()) std::swap(a, b);
  auto it = find_neighbor(adj_[a], b);
  if (it == adj_[a].end() || it->id != b) return std::nullopt;
  return it->label;
}

void LabeledGraph::neighbors(VertexId v, Label elabel, Label vlabel,
                             std::vector<VertexId>& out) const {
  out.clear();
  for (const Neighbor& n : adj_[v]) {
    if (n.label == elabel && labels_[n.id] == vlabel) out.push_back(n.id);
  }
}

std::vector<Edge> LabeledGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId v = 0; v < adj_.size(); ++v) {
    for (const Neighbor& n : adj_[v]) {
      if (v < n.id) out.push_back(Edge{v, n.id, n.label});
    }
  }
  return out;
}

void sort_batch(Batch& batch) {
  std::stable_sort(batch.begin(), batch.end(), [](const EdgeUpdate& x, const EdgeUpdate& y) {
    return std::minmax(x.src, x.dst) < std::minmax(y.src, y.dst);
  });
}

std::vector<VertexId> create_missing_vertices(LabeledGraph& g, const Batch& batch) {
  std::map<VertexId, std::optional<Label>> missing;
  for (const EdgeUpdate& u : batch) {
    if (!g.has_vertex(u.src)) {
      auto& l = missing[u.src];
      if (u.src_label) l = u.src_label;
    }
    if (!g.has_vertex(u.dst)) {
      auto& l = missing[u.dst];
      if (u.dst_label) l = u.dst_label;
    }
  }
  std::vector<VertexId> created;
  for (const auto& [id, label] : missing) {
    if (id != g.vertex_count() || !label) {
      throw GraphError(GraphError::Kind::kUnknownVertex, "unknown vertex " + std::to_string(id));
    }
    created.push_back(g.add_vertex(*label));
  }
  return created;
}

void apply_update(LabeledGraph& g, const EdgeUpdate& u) {
  if (u.op == Op::kInsert) {
    g.insert_edge(u.src, u.dst, u.label);
  } else {
    g.delete_edge(u.src, u.dst, u.label);
  }
}

}  // namespace csm
