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

// Join-tree strategy: a left-deep tree of edge joins whose intermediate
// results are cached and maintained under insertions.
//
// Leaf m holds the data edge tuples of the m-th query edge in the edge order;
// internal table T_m holds the matches of the first m query edges. An
// insertion changes leaf m by dR_m and the tables by
//
//   dT_m = (dT_{m-1} join R_m(new)) + (T_{m-1}(old) join dR_m)
//
// so each new match is produced once. Tables store homomorphic partial
// matches; isomorphism is enforced on the output.

#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "csm/framework.h"
#include "csm/seeded_strategy.h"

namespace csm {

/** Cached join table; rows are stored flat and indexed by a packed key. */
struct SjTable {
  std::vector<QVertex> schema;
  std::vector<int> column;   // per query vertex, -1 if absent
  std::vector<QVertex> key;  // indexed attributes, sorted
  std::vector<VertexId> cells;
  std::vector<int> origin;   // position of the leaf the row's delta came from
  std::unordered_map<uint64_t, std::vector<uint32_t>> index;

  SjTable() = default;
  SjTable(size_t query_vertices, std::vector<QVertex> schema, std::vector<QVertex> key);

  size_t size() const { return origin.size(); }
  const VertexId* row(size_t i) const { return cells.data() + i * schema.size(); }
  uint64_t key_of(const VertexId* r) const;
  void add(const VertexId* r, int from);
};

class SjTreeStrategy : public Strategy {
 public:
  explicit SjTreeStrategy(StrategyOptions options = {}) : options_(options) {}

  std::string name() const override { return "sj"; }
  Capabilities capabilities() const override;
  void build(const QueryGraph& q, const LabeledGraph& g) override;
  void find_matches(const LabeledGraph& g, const DeltaPlan& plan, std::span<const EdgeUpdate> batch,
                    EnumContext& ctx) override;

  const std::vector<int>& edge_order() const { return order_; }
  /** Tuples currently cached in leaves and internal tables. */
  size_t cached_tuples() const { return cached_; }
  /** Rows of T_m (m is 1-based; T_1 is the first leaf). The last table is not cached. */
  size_t table_size(size_t m) const { return table(m).size(); }
  const SjTable& table(size_t m) const { return tables_.at(m - 1); }

 private:
  void account(size_t added);

  StrategyOptions options_;
  std::vector<int> order_;
  std::vector<SjTable> leaves_;  // by position in order_
  std::vector<SjTable> tables_;  // tables_[m] = T_{m+1}, up to T_{M-1}; leaf 0 lives in tables_[0]
  size_t cached_ = 0;
};

}  // namespace csm
