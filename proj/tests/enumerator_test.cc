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


#include "csm/enumerator.h"
#include "csm/framework.h"
#include "csm/oracle.h"
#include "test_support.h"

namespace csm {
namespace {

MatchSet collect(const QueryGraph& q, const LabeledGraph& g, Semantics sem, bool dynamic, Counters& c,
                 const PartialMatch* seed = nullptr, Exclusion excl = {}) {
  MatchSet out;
  EnumerationConfig cfg;
  cfg.semantics = sem;
  EnumContext ctx(cfg, c, [&](std::span<const VertexId> m) { out.insert(Match(m.begin(), m.end())); });
  GraphView view(q, g);
  PartialMatch empty(q.vertex_count(), kNoVertex);
  const PartialMatch& s = seed ? *seed : empty;
  if (dynamic) {
    enumerate_dynamic(q, view, s, excl, ctx);
  } else {
    std::vector<QVertex> order = dfs_tree(q, 0).dfs_order();
    if (seed) {
      // Seeded vertices first.
      std::vector<QVertex> o;
      for (QVertex u = 0; u < q.vertex_count(); ++u) {
        if (s[u] != kNoVertex) o.push_back(u);
      }
      for (QVertex u : order) {
        if (s[u] == kNoVertex) o.push_back(u);
      }
      order = o;
    }
    enumerate(q, MatchingOrder(q, order), view, s, excl, ctx);
  }
  return out;
}

TEST(Intersect, SortedLists) {
  std::vector<VertexId> a{1, 3, 5, 7}, b{3, 4, 5}, c{0, 3, 5, 9}, out;
  intersect_sorted({&a, &b, &c}, out);
  EXPECT_EQ(out, (std::vector<VertexId>{3, 5}));
  std::vector<VertexId> e;
  intersect_sorted({&a, &e}, out);
  EXPECT_TRUE(out.empty());
}

TEST(Enumerate, StaticAndDynamicMatchOracle) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 150; ++i) {
    LabeledGraph g = testing::random_graph(rng, 6 + i % 12, 0.3, 1 + i % 3, 1 + i % 2);
    QueryGraph q = testing::random_query(rng, 2 + i % 5, static_cast<QueryClass>(i % 3), 1 + i % 3, 1 + i % 2);
    for (Semantics sem : {Semantics::kHomomorphism, Semantics::kIsomorphism}) {
      Counters c1, c2;
      MatchSet expected = oracle_matches(q, g, sem);
      EXPECT_EQ(collect(q, g, sem, false, c1), expected);
      EXPECT_EQ(collect(q, g, sem, true, c2), expected);
      EXPECT_EQ(c1.results, expected.size());
      EXPECT_EQ(c2.results, expected.size());
    }
  }
}

TEST(Enumerate, VisitedCandidatesCountedUnderIsomorphism) {
  // Path of three same-labeled vertices on a single data edge: the third
  // vertex can only go back to the first.
  QueryGraph q({0, 0, 0}, {{0, 1, 0}, {1, 2, 0}});
  LabeledGraph g({0, 0});
  g.insert_edge(0, 1, 0);
  Counters iso, homo;
  EXPECT_TRUE(collect(q, g, Semantics::kIsomorphism, false, iso).empty());
  EXPECT_EQ(iso.vis, 2u);
  EXPECT_EQ(iso.emp, 0u);
  EXPECT_EQ(collect(q, g, Semantics::kHomomorphism, false, homo).size(), 2u);
  EXPECT_EQ(homo.vis, 0u);
  EXPECT_EQ(iso.invalid(), iso.emp + iso.vis);
}

TEST(Enumerate, EmptyLocalCandidatesCounted) {
  QueryGraph q({0, 1, 2}, {{0, 1, 0}, {1, 2, 0}});
  LabeledGraph g({0, 1, 2});
  g.insert_edge(0, 1, 0);
  Counters c;
  EXPECT_TRUE(collect(q, g, Semantics::kHomomorphism, false, c).empty());
  EXPECT_EQ(c.emp, 1u);
  EXPECT_EQ(c.vis, 0u);
}

TEST(Enumerate, SeedAndExclusion) {
  // Triangle query on a triangle; seeding edge 0 with (0, 1) and blocking
  // data edge (1, 2) for query edges after 0 removes every match.
  QueryGraph q({0, 0, 0}, {{0, 1, 0}, {1, 2, 0}, {0, 2, 0}});
  LabeledGraph g({0, 0, 0});
  g.insert_edge(0, 1, 0);
  g.insert_edge(1, 2, 0);
  g.insert_edge(0, 2, 0);
  PartialMatch seed{0, 1, kNoVertex};
  Counters c;
  EXPECT_EQ(collect(q, g, Semantics::kIsomorphism, false, c, &seed),
            MatchSet{Match({0, 1, 2})});
  std::unordered_set<uint64_t> batch{edge_key(1, 2)};
  for (bool dyn : {false, true}) {
    Counters d;
    EXPECT_TRUE(collect(q, g, Semantics::kIsomorphism, dyn, d, &seed, Exclusion{0, &batch}).empty());
    // Blocked candidates count as neither EMP nor VIS.
    EXPECT_EQ(d.invalid(), 0u);
  }
  // The same edge is allowed for earlier query edges.
  Counters e;
  EXPECT_EQ(collect(q, g, Semantics::kIsomorphism, false, e, &seed, Exclusion{1, &batch}).size(), 1u);
}

TEST(Enumerate, LimitStopsEarly) {
  QueryGraph q({0, 0}, {{0, 1, 0}});
  LabeledGraph g({0, 0, 0, 0});
  for (VertexId a = 0; a < 4; ++a) {
    for (VertexId b = a + 1; b < 4; ++b) g.insert_edge(a, b, 0);
  }
  Counters c;
  EnumerationConfig cfg;
  cfg.limit = 3;
  size_t seen = 0;
  EnumContext ctx(cfg, c, [&](std::span<const VertexId>) { ++seen; });
  GraphView view(q, g);
  EXPECT_EQ(enumerate(q, MatchingOrder(q, {0, 1}), view, PartialMatch(2, kNoVertex), {}, ctx),
            EnumStatus::kLimitReached);
  EXPECT_EQ(seen, 3u);
}

TEST(Enumerate, DeadlineStopsEnumeration) {
  QueryGraph q({0, 0, 0, 0}, {{0, 1, 0}, {1, 2, 0}, {2, 3, 0}});
  LabeledGraph g(std::vector<Label>(40, 0));
  for (VertexId a = 0; a < 40; ++a) {
    for (VertexId b = a + 1; b < 40; ++b) g.insert_edge(a, b, 0);
  }
  Counters c;
  EnumerationConfig cfg;
  cfg.deadline = Clock::now();
  cfg.poll_interval = 16;
  EnumContext ctx(cfg, c);
  GraphView view(q, g);
  EXPECT_EQ(enumerate(q, MatchingOrder(q, {0, 1, 2, 3}), view, PartialMatch(4, kNoVertex), {}, ctx),
            EnumStatus::kBudgetExceeded);
  EXPECT_LT(c.results, 40u * 39 * 39 * 39);
}

}  // namespace
}  // namespace csm
