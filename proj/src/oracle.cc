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

#include "csm/oracle.h"

#include <algorithm>
#include <iterator>

namespace csm {

namespace {

class BruteForce {
 public:
  BruteForce(const QueryGraph& q, const LabeledGraph& g, Semantics sem,
             const std::function<void(const Match&)>& visit,
             std::optional<Clock::time_point> deadline)
      : q_(q), g_(g), sem_(sem), visit_(visit), deadline_(deadline), m_(q.vertex_count(), kNoVertex) {
    // For each query vertex, the first lower-id neighbor (if any) supplies
    // candidates; all other lower-id neighbors are verified by lookup.
    anchor_.assign(q.vertex_count(), kNoVertex);
    for (QVertex u = 0; u < q.vertex_count(); ++u) {
      for (QVertex w : q.neighbors(u)) {
        if (w < u) {
          anchor_[u] = w;
          break;
        }
      }
    }
  }

  bool run() {
    step(0);
    return !timed_out_;
  }

 private:
  bool fits(QVertex u, VertexId v) const {
    if (g_.label(v) != q_.label(u)) return false;
    for (QVertex w = 0; w < u; ++w) {
      if (sem_ == Semantics::kIsomorphism && m_[w] == v) return false;
      int k = q_.edge_id(u, w);
      if (k >= 0 && !g_.has_edge(v, m_[w], q_.edge(k).label)) return false;
    }
    return true;
  }

  void step(QVertex u) {
    if (timed_out_) return;
    if (deadline_ && (++ticks_ & 1023) == 0 && Clock::now() >= *deadline_) {
      timed_out_ = true;
      return;
    }
    if (u == q_.vertex_count()) {
      visit_(m_);
      return;
    }
    auto try_vertex = [&](VertexId v) {
      if (!fits(u, v)) return;
      m_[u] = v;
      step(u + 1);
      m_[u] = kNoVertex;
    };
    if (anchor_[u] == kNoVertex) {
      for (VertexId v = 0; v < g_.vertex_count(); ++v) try_vertex(v);
    } else {
      for (const Neighbor& nb : g_.adjacency(m_[anchor_[u]])) try_vertex(nb.id);
    }
  }

  const QueryGraph& q_;
  const LabeledGraph& g_;
  const Semantics sem_;
  const std::function<void(const Match&)>& visit_;
  const std::optional<Clock::time_point> deadline_;
  std::vector<QVertex> anchor_;
  Match m_;
  uint64_t ticks_ = 0;
  bool timed_out_ = false;
};

void check_guard(const QueryGraph& q, const LabeledGraph& g) {
  if (q.vertex_count() > kOracleMaxQueryVertices || g.vertex_count() > kOracleMaxDataVertices) {
    throw Error("oracle size guard: query or data graph too large");
  }
}

}  // namespace

bool brute_force_matches(const QueryGraph& q, const LabeledGraph& g, Semantics sem,
                         const std::function<void(const Match&)>& visit,
                         std::optional<Clock::time_point> deadline) {
  BruteForce bf(q, g, sem, visit, deadline);
  return bf.run();
}

MatchSet oracle_matches(const QueryGraph& q, const LabeledGraph& g, Semantics sem) {
  check_guard(q, g);
  MatchSet out;
  // Matches arrive in lexicographic order, so appending at the end is cheap.
  brute_force_matches(q, g, sem, [&](const Match& m) { out.emplace_hint(out.end(), m); });
  return out;
}

SignedMatches oracle_delta(const QueryGraph& q, const LabeledGraph& g_before,
                           const LabeledGraph& g_after, Semantics sem) {
  MatchSet before = oracle_matches(q, g_before, sem);
  MatchSet after = oracle_matches(q, g_after, sem);
  SignedMatches d;
  std::set_difference(after.begin(), after.end(), before.begin(), before.end(),
                      std::inserter(d.positive, d.positive.end()));
  std::set_difference(before.begin(), before.end(), after.begin(), after.end(),
                      std::inserter(d.negative, d.negative.end()));
  return d;
}

std::set<std::pair<VertexId, VertexId>> complete_relation(const QueryGraph& q, const LabeledGraph& g,
                                                          size_t k, Semantics sem) {
  std::set<std::pair<VertexId, VertexId>> rel;
  const QueryEdge& e = q.edge(k);
  for (const Match& m : oracle_matches(q, g, sem)) rel.emplace(m[e.src], m[e.dst]);
  return rel;
}

std::vector<std::set<VertexId>> match_projection(const QueryGraph& q, const MatchSet& matches) {
  std::vector<std::set<VertexId>> proj(q.vertex_count());
  for (const Match& m : matches) {
    for (QVertex u = 0; u < q.vertex_count(); ++u) proj[u].insert(m[u]);
  }
  return proj;
}

}  // namespace csm
