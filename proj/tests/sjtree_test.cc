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

#include <gtest/gtest.h>

#include "csm/harness.h"
#include "csm/orders.h"
#include "csm/sjtree.h"
#include "test_support.h"

namespace csm {
namespace {

using testing::fig1_graph;
using testing::fig1_query;

/** Rows of the table over the first `m` edges of the order, by brute force. */
std::set<std::vector<VertexId>> prefix_join(const QueryGraph& q, const LabeledGraph& g, const std::vector<int>& order,
                                            const std::vector<QVertex>& schema, size_t m) {
  std::vector<int> local(q.vertex_count(), -1);
  std::vector<Label> labels;
  for (QVertex u : schema) {
    local[u] = static_cast<int>(labels.size());
    labels.push_back(q.label(u));
  }
  std::vector<QueryEdge> edges;
  for (size_t p = 0; p < m; ++p) {
    const QueryEdge& e = q.edge(order[p]);
    edges.push_back({static_cast<QVertex>(local[e.src]), static_cast<QVertex>(local[e.dst]), e.label});
  }
  std::set<std::vector<VertexId>> rows;
  for (const Match& mt : oracle_matches(QueryGraph(labels, edges), g, Semantics::kHomomorphism)) rows.insert(mt);
  return rows;
}

::testing::AssertionResult tables_match_prefix_joins(const SjTreeStrategy& sj, const QueryGraph& q,
                                                     const LabeledGraph& g) {
  const auto& order = sj.edge_order();
  for (size_t m = 1; m < std::max<size_t>(order.size(), 2); ++m) {
    const SjTable& t = sj.table(m);
    std::set<std::vector<VertexId>> rows;
    for (size_t i = 0; i < t.size(); ++i) rows.emplace(t.row(i), t.row(i) + t.schema.size());
    if (rows.size() != t.size()) return ::testing::AssertionFailure() << "duplicate rows in T" << m;
    if (rows != prefix_join(q, g, order, t.schema, m)) return ::testing::AssertionFailure() << "T" << m << " differs";
  }
  return ::testing::AssertionSuccess();
}

TEST(SjTree, EdgeOrderStartsWithTheSmallestRelation) {
  const QueryGraph q = fig1_query();
  const auto order = sj_edge_order(q, fig1_graph());
  ASSERT_EQ(order.size(), 4u);
  EXPECT_EQ(order[0], q.edge_id(1, 3));
  // (u0,u1) and (u1,u3) share u1; (u0,u1) is the only covered candidate of size 3.
  EXPECT_EQ(order[1], q.edge_id(0, 1));
}

TEST(SjTree, EqualRelationsFollowCanonicalOrder) {
  LabeledGraph g({0, 0, 0});
  g.insert_edge(0, 1, 0);
  g.insert_edge(1, 2, 0);
  g.insert_edge(0, 2, 0);
  const QueryGraph q({0, 0, 0}, {{0, 1, 0}, {1, 2, 0}, {0, 2, 0}});
  EXPECT_EQ(sj_edge_order(q, g), (std::vector<int>{0, 1, 2}));
}

TEST(SjTree, Fig1TablesAndInsertion) {
  const QueryGraph q = fig1_query();
  LabeledGraph g = fig1_graph();
  SjTreeStrategy sj;
  StreamRunner runner(q, g, sj, {});
  runner.build();
  EXPECT_TRUE(tables_match_prefix_joins(sj, q, g));
  EXPECT_EQ(sj.table_size(1), 1u);
  UpdateResult r = runner.process({EdgeUpdate{Op::kInsert, 6, 10, 0, {}, {}}});
  ASSERT_EQ(r.matches.size(), 1u);
  EXPECT_EQ(r.matches[0].match, (Match{2, 6, 5, 10}));
  EXPECT_EQ(r.matches[0].k, q.edge_id(1, 3));
  EXPECT_EQ(sj.table_size(1), 2u);
  EXPECT_TRUE(tables_match_prefix_joins(sj, q, g));
  EXPECT_THROW(runner.process({EdgeUpdate{Op::kDelete, 0, 4, 0, {}, {}}}), CapabilityError);
}

TEST(SjTree, EmptyGraphHasEmptyTables) {
  const QueryGraph q = fig1_query();
  LabeledGraph g(std::vector<Label>(12, 0));
  SjTreeStrategy sj;
  sj.build(q, g);
  EXPECT_EQ(sj.cached_tuples(), 0u);
}

TEST(SjTree, UnmatchedEdgeChangesNothing) {
  const QueryGraph q = fig1_query();
  LabeledGraph g = fig1_graph();
  SjTreeStrategy sj;
  StreamRunner runner(q, g, sj, {});
  runner.build();
  const size_t before = sj.cached_tuples();
  UpdateResult r = runner.process({EdgeUpdate{Op::kInsert, 8, 9, 0, {}, {}}});  // D-D
  EXPECT_TRUE(r.matches.empty());
  EXPECT_EQ(sj.cached_tuples(), before);
}

TEST(SjTree, TablesFollowRandomInsertStreams) {
  std::mt19937_64 rng(5);
  testing::InstanceParams p;
  p.insert_only = true;
  p.max_ops = 15;
  for (int i = 0; i < 40; ++i) {
    testing::Instance inst = testing::random_instance(rng, p);
    auto expected = testing::expected_deltas(inst, Semantics::kIsomorphism);
    auto check = testing::check_strategy(inst, expected, "sj", Semantics::kIsomorphism, {},
                                         [&](Strategy& s, const LabeledGraph& g, size_t) {
                                           ASSERT_TRUE(tables_match_prefix_joins(
                                               static_cast<SjTreeStrategy&>(s), inst.q, g));
                                         });
    ASSERT_EQ(check.mismatches, 0u) << check.first_failure;
  }
}

/** One hub with many same-label leaves: a path query over it fans out quadratically. */
LabeledGraph hub_graph(size_t leaves) {
  LabeledGraph g(std::vector<Label>(leaves + 1, 0));
  for (VertexId v = 1; v <= leaves; ++v) g.insert_edge(0, v, 0);
  return g;
}

TEST(SjTree, MemoryCapReportsOutOfMemory) {
  const QueryGraph q({0, 0, 0, 0}, {{0, 1, 0}, {1, 2, 0}, {2, 3, 0}});
  BenchmarkConfig cfg;
  cfg.options.memory_cap = 1000;
  RunMetrics m = run_query("hub", q, hub_graph(60), {}, "sj", cfg);
  EXPECT_EQ(m.status, QueryStatus::kOutOfMemory);
  cfg.options.memory_cap = 10'000'000;
  EXPECT_EQ(run_query("hub", q, hub_graph(60), {}, "sj", cfg).status, QueryStatus::kSolved);
}

}  // namespace
}  // namespace csm
