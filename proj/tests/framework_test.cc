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

#include <map>

#include "csm/framework.h"
#include "csm/strategy_factory.h"
#include "test_support.h"

namespace csm {
namespace {

using testing::fig1_graph;
using testing::fig1_query;

EdgeUpdate ins(VertexId a, VertexId b, Label l = 0) { return EdgeUpdate{Op::kInsert, a, b, l, {}, {}}; }
EdgeUpdate del(VertexId a, VertexId b, Label l = 0) { return EdgeUpdate{Op::kDelete, a, b, l, {}, {}}; }

TEST(NormalizeBatch, CancelsMatchingPairs) {
  auto [minus, plus] = normalize_batch({ins(0, 1), del(1, 0), del(2, 3), ins(4, 5, 1), del(4, 5, 0)});
  ASSERT_EQ(minus.size(), 2u);
  EXPECT_EQ(minus[0].key(), edge_key(2, 3));
  EXPECT_EQ(minus[1].key(), edge_key(4, 5));
  ASSERT_EQ(plus.size(), 1u);
  EXPECT_EQ(plus[0].label, 1u);  // relabel: delete old, insert new
}

TEST(DeltaPlan, TuplesPerQueryEdge) {
  const QueryGraph q = fig1_query();
  LabeledGraph g = fig1_graph();
  g.insert_edge(6, 10, 0);
  DeltaPlan plan = make_delta_plan(q, g, std::vector<EdgeUpdate>{ins(10, 6)}, Op::kInsert);
  const int k = q.edge_id(1, 3);
  for (size_t i = 0; i < plan.per_edge.size(); ++i) {
    EXPECT_EQ(plan.per_edge[i].size(), static_cast<size_t>(static_cast<int>(i) == k)) << i;
  }
  const DeltaTuple& t = plan.per_edge[k][0];
  // Query src maps to the B-labeled endpoint whatever the written direction.
  const bool src_is_u1 = q.edge(k).src == 1;
  EXPECT_EQ(t.src_v, src_is_u1 ? 6u : 10u);
  EXPECT_TRUE(plan.batch_edges.contains(edge_key(6, 10)));
}

TEST(DeltaPlan, SymmetricLabelsGiveBothOrientations) {
  QueryGraph q({0, 0}, {{0, 1, 0}});
  LabeledGraph g({0, 0});
  g.insert_edge(0, 1, 0);
  DeltaPlan plan = make_delta_plan(q, g, std::vector<EdgeUpdate>{ins(0, 1)}, Op::kInsert);
  ASSERT_EQ(plan.per_edge[0].size(), 2u);
  EXPECT_NE(plan.per_edge[0][0].reversed, plan.per_edge[0][1].reversed);
}

/** Records the order of strategy calls relative to the graph state. */
class Recorder : public Strategy {
 public:
  std::string name() const override { return "rec"; }
  Capabilities capabilities() const override {
    Capabilities c;
    c.batch = batch;
    return c;
  }
  void build(const QueryGraph& q, const LabeledGraph&) override { query_ = &q; }
  void on_vertex_added(const LabeledGraph&, VertexId v) override { log.push_back("add " + std::to_string(v)); }
  void on_vertex_relabeled(const LabeledGraph&, VertexId v) override { log.push_back("relabel " + std::to_string(v)); }
  void update_index(const LabeledGraph& g, std::span<const EdgeUpdate> b, Op op) override {
    log.push_back(std::string("index ") + op_char(op) + std::to_string(b.size()) + (g.has_edge(b[0].src, b[0].dst) ? " present" : " absent"));
  }
  void find_matches(const LabeledGraph& g, const DeltaPlan& plan, std::span<const EdgeUpdate> b, EnumContext&) override {
    log.push_back(std::string("find ") + op_char(plan.op) + std::to_string(b.size()) + (g.has_edge(b[0].src, b[0].dst) ? " present" : " absent"));
  }
  bool batch = false;
  std::vector<std::string> log;
};

TEST(StreamRunner, PhaseOrder) {
  QueryGraph q({0, 0}, {{0, 1, 0}});
  LabeledGraph g({0, 0, 0, 0});
  g.insert_edge(0, 1, 0);
  Recorder r;
  StreamRunner runner(q, g, r, {});
  runner.process({ins(2, 3), del(0, 1)});
  // Deletions first: enumerate while the edge is there, then update the index.
  EXPECT_EQ(r.log, (std::vector<std::string>{"find -1 present", "index -1 absent", "index +1 present", "find +1 present"}));
}

TEST(StreamRunner, BatchesSplitForSingleEdgeStrategies) {
  QueryGraph q({0, 0}, {{0, 1, 0}});
  LabeledGraph g({0, 0, 0, 0});
  for (bool batch : {false, true}) {
    LabeledGraph data = g;
    Recorder r;
    r.batch = batch;
    StreamRunner runner(q, data, r, {});
    runner.process({ins(0, 1), ins(2, 3)});
    EXPECT_EQ(r.log.size(), batch ? 2u : 4u);
  }
}

TEST(StreamRunner, NewVerticesAnnouncedBeforeInsertion) {
  QueryGraph q({0, 0}, {{0, 1, 0}});
  LabeledGraph g({0});
  Recorder r;
  StreamRunner runner(q, g, r, {});
  runner.process({EdgeUpdate{Op::kInsert, 0, 2, 0, std::nullopt, 1}, EdgeUpdate{Op::kInsert, 1, 0, 0, 1, std::nullopt}});
  ASSERT_GE(r.log.size(), 2u);
  EXPECT_EQ(r.log[0], "add 1");
  EXPECT_EQ(r.log[1], "add 2");
  EXPECT_EQ(g.vertex_count(), 3u);
}

TEST(StreamRunner, VertexOperations) {
  const QueryGraph q = fig1_query();
  for (const std::string& algo : {"gf", "tf", "sym", "im"}) {
    LabeledGraph g = fig1_graph();
    auto s = make_strategy(algo);
    StreamRunner runner(q, g, *s, {});
    // Deleting v4 removes the only initial match; v4 stays as an isolated id.
    UpdateResult r = runner.delete_vertex(4);
    ASSERT_EQ(r.matches.size(), 1u) << algo;
    EXPECT_EQ(r.matches[0].sign, Op::kDelete);
    EXPECT_EQ(g.vertex_count(), 12u);
    EXPECT_EQ(g.degree(4), 0u);
    // A new B vertex adjacent to v0 and v8 recreates the match with a new id.
    r = runner.insert_vertex(1, {{0, 0}, {8, 0}});
    ASSERT_EQ(r.matches.size(), 1u) << algo;
    EXPECT_EQ(r.matches[0].match, (Match{0, 12, 5, 8}));
    // Relabeling v12 to C removes it again; phases keep increasing.
    r = runner.relabel_vertex(12, 2);
    ASSERT_EQ(r.matches.size(), 1u) << algo;
    EXPECT_EQ(r.matches[0].sign, Op::kDelete);
    EXPECT_EQ(g.label(12), 2u);
    EXPECT_EQ(g.degree(12), 2u);
    // Edge relabel of e(v5, v8) breaks nothing left, then restores nothing.
    r = runner.relabel_edge(5, 8, 1);
    EXPECT_TRUE(r.matches.empty()) << algo;
    EXPECT_EQ(g.edge_label(5, 8), 1u);
  }
}

TEST(StreamRunner, CapabilityViolationsThrow) {
  const QueryGraph q = fig1_query();
  LabeledGraph g = fig1_graph();
  auto sj = make_strategy("sj");
  StreamRunner runner(q, g, *sj, {});
  EXPECT_THROW(runner.process({del(0, 4)}), CapabilityError);
  EXPECT_THROW(runner.delete_vertex(0), CapabilityError);
  RunConfig limited;
  limited.limit_per_update = 1;
  EXPECT_THROW(StreamRunner(q, g, *sj, limited), CapabilityError);
}

TEST(StreamRunner, TimeLimitMarksUnsolved) {
  // Dense graph, one label: a single insertion has a huge number of matches.
  const size_t n = 60;
  LabeledGraph g(std::vector<Label>(n, 0));
  for (VertexId a = 1; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) g.insert_edge(a, b, 0);
  }
  QueryGraph q({0, 0, 0, 0, 0, 0}, {{0, 1, 0}, {1, 2, 0}, {2, 3, 0}, {3, 4, 0}, {4, 5, 0}});
  auto gf = make_strategy("gf");
  RunConfig rc;
  rc.time_limit_s = 0.05;
  rc.keep_matches = false;
  StreamOutcome out = run_stream(q, g, {{ins(0, 1)}, {ins(0, 2)}}, *gf, rc);
  EXPECT_EQ(out.totals.status, RunStatus::kUnsolved);
  EXPECT_EQ(out.updates.size(), 1u);
  EXPECT_EQ(out.updates[0].status, EnumStatus::kBudgetExceeded);
}

TEST(StreamRunner, ComponentsOfABatchAreDisjoint) {
  // Two new edges of one match: components exclude batch edges on later query
  // edges, so only the component of the larger query edge reports it.
  const QueryGraph q = fig1_query();
  LabeledGraph g = fig1_graph();
  g.delete_edge(5, 10);
  auto gf = make_strategy("gf");
  StreamRunner runner(q, g, *gf, {});
  UpdateResult r = runner.process({ins(6, 10), ins(5, 10)});
  ASSERT_EQ(r.matches.size(), 1u);
  EXPECT_EQ(r.matches[0].match, (Match{2, 6, 5, 10}));
  EXPECT_EQ(r.matches[0].k, std::max(q.edge_id(1, 3), q.edge_id(2, 3)));
}

TEST(StreamRunner, TotalsAddUp) {
  const QueryGraph q = fig1_query();
  LabeledGraph g = fig1_graph();
  auto tf = make_strategy("tf");
  StreamOutcome out = run_stream(q, g, {{ins(6, 10)}, {del(0, 4)}}, *tf, {});
  EXPECT_EQ(out.totals.status, RunStatus::kSolved);
  EXPECT_EQ(out.totals.counters.results, 2u);
  EXPECT_EQ(out.totals.update_ms.size(), 2u);
  EXPECT_EQ(out.totals.counters.invalid(), out.totals.counters.emp + out.totals.counters.vis);
}

}  // namespace
}  // namespace csm
