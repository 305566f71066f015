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

#include "csm/sjtree.h"

#include <algorithm>

#include "csm/hash_join.h"
#include "csm/orders.h"

namespace csm {

SjTable::SjTable(size_t query_vertices, std::vector<QVertex> s, std::vector<QVertex> k)
    : schema(std::move(s)), column(query_vertices, -1), key(std::move(k)) {
  for (size_t i = 0; i < schema.size(); ++i) column[schema[i]] = static_cast<int>(i);
}

uint64_t SjTable::key_of(const VertexId* r) const {
  uint64_t k = 0;
  for (QVertex u : key) k = (k << 32) | r[column[u]];
  return k;
}

void SjTable::add(const VertexId* r, int from) {
  const uint32_t id = static_cast<uint32_t>(size());
  cells.insert(cells.end(), r, r + schema.size());
  origin.push_back(from);
  if (!key.empty()) index[key_of(r)].push_back(id);
}

namespace {

std::vector<QVertex> shared(const std::vector<QVertex>& schema, const QueryEdge& e) {
  std::vector<QVertex> s;
  for (QVertex u : {e.src, e.dst}) {
    if (std::find(schema.begin(), schema.end(), u) != schema.end()) s.push_back(u);
  }
  std::sort(s.begin(), s.end());
  return s;
}

/**
 * Joins left rows [lb, le) with leaf rows [rb, re) on the leaf key, calling
 * out(row, origin) with the combined row in `out_schema` order. With
 * `from_left` the left range is scanned and the left origin kept; otherwise
 * the leaf range is scanned. Returns false when ctx stopped.
 */
template <typename Out>
bool join_ranges(const SjTable& left, size_t lb, size_t le, const SjTable& leaf, size_t rb, size_t re,
                 const std::vector<QVertex>& out_schema, bool from_left, EnumContext* ctx, Out&& out) {
  std::vector<VertexId> row(out_schema.size());
  auto combine = [&](size_t i, size_t j) {
    const VertexId* l = left.row(i);
    const VertexId* r = leaf.row(j);
    for (size_t c = 0; c < out_schema.size(); ++c) {
      const QVertex u = out_schema[c];
      row[c] = left.column[u] >= 0 ? l[left.column[u]] : r[leaf.column[u]];
    }
    out(row.data(), from_left ? left.origin[i] : leaf.origin[j]);
    if (ctx) {
      ctx->tick();
      if (ctx->stopped()) return false;
    }
    return true;
  };
  if (from_left) {
    for (size_t i = lb; i < le; ++i) {
      auto it = leaf.index.find(left.key_of(left.row(i)));
      if (it == leaf.index.end()) continue;
      for (uint32_t j : it->second) {
        if (j >= rb && j < re && !combine(i, j)) return false;
      }
    }
  } else {
    for (size_t j = rb; j < re; ++j) {
      auto it = left.index.find(leaf.key_of(leaf.row(j)));
      if (it == left.index.end()) continue;
      for (uint32_t i : it->second) {
        if (i >= lb && i < le && !combine(i, j)) return false;
      }
    }
  }
  return true;
}

}  // namespace

Capabilities SjTreeStrategy::capabilities() const {
  Capabilities c;
  c.edge_delete = false;
  c.vertex_delete = false;
  c.label_update = false;
  c.batch = false;
  c.early_termination = false;
  return c;
}

void SjTreeStrategy::account(size_t added) {
  cached_ += added;
  if (cached_ > options_.memory_cap) throw MemoryCapExceeded("join cache exceeds the tuple cap");
}

void SjTreeStrategy::build(const QueryGraph& q, const LabeledGraph& g) {
  query_ = &q;
  order_ = sj_edge_order(q, g);
  leaves_.clear();
  tables_.clear();
  cached_ = 0;
  const size_t m = order_.size(), n = q.vertex_count();
  if (m == 0) return;

  // Schemas and keys.
  std::vector<std::vector<QVertex>> schema(m);
  for (size_t p = 0; p < m; ++p) {
    const QueryEdge& e = q.edge(order_[p]);
    if (p > 0) schema[p] = schema[p - 1];
    for (QVertex u : {e.src, e.dst}) {
      if (std::find(schema[p].begin(), schema[p].end(), u) == schema[p].end()) schema[p].push_back(u);
    }
  }
  for (size_t p = 0; p < m; ++p) {
    const QueryEdge& e = q.edge(order_[p]);
    leaves_.emplace_back(n, std::vector<QVertex>{e.src, e.dst},
                         p == 0 ? std::vector<QVertex>{} : shared(schema[p - 1], e));
  }
  for (size_t p = 0; p + 1 < m || p == 0; ++p) {
    tables_.emplace_back(n, schema[p], p + 1 < m ? shared(schema[p], q.edge(order_[p + 1])) : std::vector<QVertex>{});
  }

  // Leaf contents.
  const auto edges = g.edges();
  for (size_t p = 0; p < m; ++p) {
    const QueryEdge& e = q.edge(order_[p]);
    SjTable& dst = p == 0 ? tables_[0] : leaves_[p];
    size_t added = 0;
    for (const Edge& d : edges) {
      if (d.label != e.label) continue;
      const Label ls = g.label(d.src), ld = g.label(d.dst);
      if (q.label(e.src) == ls && q.label(e.dst) == ld) {
        VertexId r[2] = {d.src, d.dst};
        dst.add(r, static_cast<int>(p));
        ++added;
      }
      if (q.label(e.src) == ld && q.label(e.dst) == ls) {
        VertexId r[2] = {d.dst, d.src};
        dst.add(r, static_cast<int>(p));
        ++added;
      }
    }
    account(added);
  }

  // Internal tables T_2 .. T_{M-1}.
  for (size_t p = 1; p + 1 < m; ++p) {
    SjTable& out = tables_[p];
    const SjTable& left = tables_[p - 1];
    const SjTable& leaf = leaves_[p];
    join_ranges(left, 0, left.size(), leaf, 0, leaf.size(), out.schema, true, nullptr,
                [&](const VertexId* r, int from) { out.add(r, from); });
    account(out.size());
  }
}

void SjTreeStrategy::find_matches(const LabeledGraph&, const DeltaPlan& plan, std::span<const EdgeUpdate>,
                                  EnumContext& ctx) {
  const QueryGraph& q = *query_;
  const size_t m = order_.size();
  if (m == 0) return;
  const bool iso = ctx.config().semantics == Semantics::kIsomorphism;

  Match match(q.vertex_count());
  auto emit = [&](const std::vector<QVertex>& schema, const VertexId* r, int from) {
    std::span<const VertexId> row(r, schema.size());
    if (iso && !injective(row)) return;
    for (size_t c = 0; c < schema.size(); ++c) match[schema[c]] = r[c];
    ctx_tag(order_[from]);
    ctx.emit(match);
  };

  // dR of every leaf, appended to the leaf right away; rows from leaf_old on are new.
  std::vector<size_t> leaf_old(m, 0);
  for (size_t p = 0; p < m; ++p) {
    SjTable& dst = p == 0 ? tables_[0] : leaves_[p];
    leaf_old[p] = dst.size();
    for (const DeltaTuple& t : plan.per_edge[order_[p]]) {
      VertexId r[2] = {t.src_v, t.dst_v};
      dst.add(r, static_cast<int>(p));
    }
    account(dst.size() - leaf_old[p]);
  }

  if (m == 1) {
    for (size_t i = leaf_old[0]; i < tables_[0].size(); ++i) emit(tables_[0].schema, tables_[0].row(i), 0);
    return;
  }

  // Rows of tables_[p] from table_old[p] on are dT_{p+1}.
  std::vector<size_t> table_old(tables_.size(), 0);
  table_old[0] = leaf_old[0];
  for (size_t p = 1; p < m; ++p) {
    const SjTable& left = tables_[p - 1];
    const SjTable& leaf = leaves_[p];
    const bool last = p + 1 == m;
    std::vector<QVertex> final_schema;
    if (last) {
      final_schema = left.schema;
      for (QVertex u : leaf.schema) {
        if (left.column[u] < 0) final_schema.push_back(u);
      }
    }
    const std::vector<QVertex>& schema = last ? final_schema : tables_[p].schema;
    size_t before = 0;
    if (!last) {
      table_old[p] = tables_[p].size();
      before = table_old[p];
    }
    auto sink = [&](const VertexId* r, int from) {
      if (last) {
        emit(schema, r, from);
      } else {
        tables_[p].add(r, from);
      }
    };
    // dT_{p} join R_{p+1}(new), then T_{p}(old) join dR_{p+1}.
    if (!join_ranges(left, table_old[p - 1], left.size(), leaf, 0, leaf.size(), schema, true, &ctx, sink)) return;
    if (!join_ranges(left, 0, table_old[p - 1], leaf, leaf_old[p], leaf.size(), schema, false, &ctx, sink)) return;
    if (!last) account(tables_[p].size() - before);
  }
}

}  // namespace csm
