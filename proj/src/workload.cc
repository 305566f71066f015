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

#include "csm/workload.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace csm {

SampledStream sample_stream(const std::vector<Label>& labels, const std::vector<Edge>& edges, double rate,
                            SampleMode mode, Op op, uint64_t seed) {
  if (!(rate > 0 && rate <= 1)) throw std::invalid_argument("rate must be in (0, 1]");
  const size_t m = edges.size();
  const size_t take = std::min(m, static_cast<size_t>(std::llround(rate * static_cast<double>(m))));

  std::vector<size_t> idx(m);
  std::iota(idx.begin(), idx.end(), size_t{0});
  if (mode == SampleMode::kRandom) {
    std::mt19937_64 rng(seed);
    std::shuffle(idx.begin(), idx.end(), rng);
    // Sampled edges keep their file order.
    std::sort(idx.end() - static_cast<std::ptrdiff_t>(take), idx.end());
    std::sort(idx.begin(), idx.end() - static_cast<std::ptrdiff_t>(take));
  }
  const auto split = idx.begin() + static_cast<std::ptrdiff_t>(m - take);

  SampledStream out{LabeledGraph(labels), {}};
  auto add = [&](size_t i) { out.initial.insert_edge(edges[i].src, edges[i].dst, edges[i].label); };
  if (op == Op::kInsert) {
    std::for_each(idx.begin(), split, add);
  } else {
    for (const Edge& e : edges) out.initial.insert_edge(e.src, e.dst, e.label);
  }
  for (auto it = split; it != idx.end(); ++it) {
    const Edge& e = edges[*it];
    out.stream.push_back(Batch{EdgeUpdate{op, e.src, e.dst, e.label, std::nullopt, std::nullopt}});
  }
  return out;
}

std::vector<double> label_probabilities(size_t k, LabelDistribution d) {
  if (k == 0) throw std::invalid_argument("need at least one label");
  std::vector<double> p(k);
  for (size_t i = 0; i < k; ++i) {
    switch (d) {
      case LabelDistribution::kUniform: p[i] = 1; break;
      case LabelDistribution::kLinear: p[i] = static_cast<double>(k - i); break;
      case LabelDistribution::kZipf: p[i] = 1.0 / static_cast<double>(i + 1); break;
    }
  }
  const double sum = std::accumulate(p.begin(), p.end(), 0.0);
  for (double& x : p) x /= sum;
  return p;
}

std::vector<Label> assign_labels(size_t vertices, size_t k, LabelDistribution d, uint64_t seed) {
  const auto p = label_probabilities(k, d);
  std::discrete_distribution<Label> dist(p.begin(), p.end());
  std::mt19937_64 rng(seed);
  std::vector<Label> out(vertices);
  for (Label& l : out) l = dist(rng);
  return out;
}

std::optional<QueryShape> parse_shape(const std::string& s) {
  if (s == "tree") return QueryShape::kTree;
  if (s == "sparse") return QueryShape::kSparse;
  if (s == "dense") return QueryShape::kDense;
  if (s == "path") return QueryShape::kPath;
  if (s == "star") return QueryShape::kStar;
  if (s == "cycle") return QueryShape::kCycle;
  return std::nullopt;
}

std::optional<LabelDistribution> parse_distribution(const std::string& s) {
  if (s == "uniform") return LabelDistribution::kUniform;
  if (s == "linear") return LabelDistribution::kLinear;
  if (s == "zipf" || s == "zipfian") return LabelDistribution::kZipf;
  return std::nullopt;
}

bool has_shape(const QueryGraph& q, QueryShape shape) {
  const size_t n = q.vertex_count(), m = q.edge_count();
  auto max_degree = [&] {
    size_t d = 0;
    for (QVertex u = 0; u < n; ++u) d = std::max(d, q.degree(u));
    return d;
  };
  switch (shape) {
    case QueryShape::kTree: return classify(q) == QueryClass::kTree;
    case QueryShape::kSparse: return classify(q) == QueryClass::kSparse;
    case QueryShape::kDense: return classify(q) == QueryClass::kDense;
    case QueryShape::kPath: return m + 1 == n && max_degree() <= 2;
    case QueryShape::kStar: return m + 1 == n && (n <= 2 || max_degree() == n - 1);
    case QueryShape::kCycle: return n >= 3 && m == n && max_degree() == 2;
  }
  return false;
}

namespace {

constexpr int kAttempts = 200;

/** Query on data vertices `vs` with the given data edges. */
QueryGraph make_query(const LabeledGraph& g, const std::vector<VertexId>& vs,
                      const std::vector<std::pair<VertexId, VertexId>>& data_edges) {
  std::vector<Label> labels;
  for (VertexId v : vs) labels.push_back(g.label(v));
  auto pos = [&](VertexId v) {
    return static_cast<QVertex>(std::find(vs.begin(), vs.end(), v) - vs.begin());
  };
  std::vector<QueryEdge> edges;
  for (auto [a, b] : data_edges) edges.push_back(QueryEdge{pos(a), pos(b), *g.edge_label(a, b)});
  return QueryGraph(std::move(labels), std::move(edges));
}

std::vector<std::pair<VertexId, VertexId>> induced(const LabeledGraph& g, const std::vector<VertexId>& vs) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (size_t i = 0; i < vs.size(); ++i) {
    for (size_t j = i + 1; j < vs.size(); ++j) {
      if (g.has_edge(vs[i], vs[j])) out.emplace_back(vs[i], vs[j]);
    }
  }
  return out;
}

VertexId random_neighbor(const LabeledGraph& g, VertexId v, std::mt19937_64& rng) {
  auto adj = g.adjacency(v);
  return adj[std::uniform_int_distribution<size_t>(0, adj.size() - 1)(rng)].id;
}

/** Random walk collecting `size` distinct vertices and the edges that discovered them. */
bool walk_tree(const LabeledGraph& g, VertexId start, size_t size, std::mt19937_64& rng,
               std::vector<VertexId>& vs, std::vector<std::pair<VertexId, VertexId>>& tree) {
  vs = {start};
  tree.clear();
  VertexId cur = start;
  for (size_t steps = 0; vs.size() < size && steps < 50 * size; ++steps) {
    if (g.degree(cur) == 0) return false;
    VertexId next = random_neighbor(g, cur, rng);
    if (std::find(vs.begin(), vs.end(), next) == vs.end()) {
      vs.push_back(next);
      tree.emplace_back(cur, next);
    }
    cur = next;
  }
  return vs.size() == size;
}

/** Self-avoiding walk of `size` vertices. */
bool walk_path(const LabeledGraph& g, VertexId start, size_t size, std::mt19937_64& rng, std::vector<VertexId>& vs) {
  vs = {start};
  while (vs.size() < size) {
    std::vector<VertexId> next;
    for (const Neighbor& n : g.adjacency(vs.back())) {
      if (std::find(vs.begin(), vs.end(), n.id) == vs.end()) next.push_back(n.id);
    }
    if (next.empty()) return false;
    vs.push_back(next[std::uniform_int_distribution<size_t>(0, next.size() - 1)(rng)]);
  }
  return true;
}

std::optional<QueryGraph> extract_one(const LabeledGraph& g, QueryShape shape, size_t size, std::mt19937_64& rng) {
  const size_t nv = g.vertex_count();
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(nv - 1));
  std::vector<VertexId> vs;
  std::vector<std::pair<VertexId, VertexId>> es;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const VertexId start = pick(rng);
    if (g.degree(start) == 0) continue;
    switch (shape) {
      case QueryShape::kTree:
        if (!walk_tree(g, start, size, rng, vs, es)) continue;
        break;
      case QueryShape::kSparse:
      case QueryShape::kDense: {
        std::vector<std::pair<VertexId, VertexId>> tree;
        if (!walk_tree(g, start, size, rng, vs, tree)) continue;
        es = induced(g, vs);
        if (shape == QueryShape::kSparse) {
          // Drop random non-tree edges until the query is sparse.
          std::vector<std::pair<VertexId, VertexId>> extra;
          for (auto e : es) {
            bool in_tree = std::any_of(tree.begin(), tree.end(), [&](auto t) {
              return edge_key(t.first, t.second) == edge_key(e.first, e.second);
            });
            if (!in_tree) extra.push_back(e);
          }
          std::shuffle(extra.begin(), extra.end(), rng);
          const size_t max_edges = (3 * size) / 2;  // average degree <= 3
          if (extra.empty()) continue;
          extra.resize(std::min(extra.size(), max_edges - tree.size()));
          es = tree;
          es.insert(es.end(), extra.begin(), extra.end());
        }
        break;
      }
      case QueryShape::kPath:
        if (!walk_path(g, start, size, rng, vs)) continue;
        es.clear();
        for (size_t i = 0; i + 1 < vs.size(); ++i) es.emplace_back(vs[i], vs[i + 1]);
        break;
      case QueryShape::kStar: {
        auto adj = g.adjacency(start);
        if (adj.size() + 1 < size) continue;
        std::vector<VertexId> leaves;
        for (const Neighbor& n : adj) leaves.push_back(n.id);
        std::shuffle(leaves.begin(), leaves.end(), rng);
        vs = {start};
        es.clear();
        for (size_t i = 0; i + 1 < size; ++i) {
          vs.push_back(leaves[i]);
          es.emplace_back(start, leaves[i]);
        }
        break;
      }
      case QueryShape::kCycle:
        if (size < 3 || !walk_path(g, start, size, rng, vs) || !g.has_edge(vs.back(), vs.front())) continue;
        es.clear();
        for (size_t i = 0; i < vs.size(); ++i) es.emplace_back(vs[i], vs[(i + 1) % vs.size()]);
        break;
    }
    QueryGraph q = make_query(g, vs, es);
    if (has_shape(q, shape)) return q;
  }
  return std::nullopt;
}

}  // namespace

std::vector<QueryGraph> extract_queries(const LabeledGraph& g, QueryShape shape, size_t size, size_t count,
                                        uint64_t seed) {
  if (size < 2) throw std::invalid_argument("query size must be at least 2");
  std::vector<QueryGraph> out;
  if (g.vertex_count() == 0) return out;
  std::mt19937_64 rng(seed);
  for (size_t i = 0; i < count; ++i) {
    if (auto q = extract_one(g, shape, size, rng)) out.push_back(std::move(*q));
  }
  return out;
}

}  // namespace csm
