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

#include "csm/enumerator.h"

#include <algorithm>
#include <limits>

namespace csm {

MatchingOrder::MatchingOrder(const QueryGraph& q, std::vector<QVertex> order)
    : order_(std::move(order)) {
  const size_t n = q.vertex_count();
  if (order_.size() != n) throw Error("matching order must cover every query vertex");
  pos_.assign(n, n);
  for (size_t i = 0; i < n; ++i) {
    if (order_[i] >= n || pos_[order_[i]] != n) throw Error("matching order is not a permutation");
    pos_[order_[i]] = i;
  }
  earlier_.assign(n, {});
  for (size_t i = 0; i < n; ++i) {
    for (QVertex w : q.neighbors(order_[i])) {
      if (pos_[w] < i) earlier_[i].push_back(w);
    }
    if (i > 0 && earlier_[i].empty()) throw Error("matching order is not connected");
  }
}

// ---------------------------------------------------------------------------

void GraphView::extensions(QVertex from_u, VertexId from_v, QVertex to_u,
                           std::vector<VertexId>& out) const {
  g_.neighbors(from_v, q_.edge_label(from_u, to_u), q_.label(to_u), out);
}

bool GraphView::admits(QVertex u, VertexId v) const { return g_.label(v) == q_.label(u); }

void GraphView::initial_candidates(QVertex u, std::vector<VertexId>& out) const {
  out.clear();
  for (VertexId v = 0; v < g_.vertex_count(); ++v) {
    if (g_.label(v) != q_.label(u)) continue;
    bool ok = true;
    for (QVertex w : q_.neighbors(u)) {
      const Label el = q_.edge_label(u, w), wl = q_.label(w);
      bool found = false;
      for (const Neighbor& nb : g_.adjacency(v)) {
        if (nb.label == el && g_.label(nb.id) == wl) {
          found = true;
          break;
        }
      }
      if (!found) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(v);
  }
}

// ---------------------------------------------------------------------------

Counters& Counters::operator+=(const Counters& o) {
  results += o.results;
  emp += o.emp;
  vis += o.vis;
  recursions += o.recursions;
  seeds += o.seeds;
  return *this;
}

void EnumContext::emit(std::span<const VertexId> m) {
  ++counters_.results;
  ++emitted_;
  if (sink_) sink_(m);
  if (config_.limit != 0 && emitted_ >= config_.limit) status_ = EnumStatus::kLimitReached;
}

void EnumContext::tick() {
  ++counters_.recursions;
  if (!config_.deadline) return;
  if (++since_poll_ >= config_.poll_interval) {
    since_poll_ = 0;
    if (Clock::now() >= *config_.deadline) status_ = EnumStatus::kBudgetExceeded;
  }
}

namespace {

void merge_into(const std::vector<VertexId>& a, const std::vector<VertexId>& b,
                std::vector<VertexId>& out, size_t cap) {
  out.clear();
  auto i = a.begin(), j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      out.push_back(*i);
      if (out.size() >= cap) return;
      ++i;
      ++j;
    }
  }
}

/** Intersection; gives up (returning false) once the result reaches `cap`. */
bool intersect_capped(std::vector<const std::vector<VertexId>*>& lists, std::vector<VertexId>& out,
                      std::vector<VertexId>& scratch, size_t cap) {
  std::sort(lists.begin(), lists.end(),
            [](const auto* a, const auto* b) { return a->size() < b->size(); });
  if (lists.size() == 1) {
    if (lists[0]->size() >= cap) return false;
    out = *lists[0];
    return true;
  }
  const size_t last = lists.size() - 1;
  merge_into(*lists[0], *lists[1], out, last == 1 ? cap : std::numeric_limits<size_t>::max());
  for (size_t i = 2; i < lists.size() && !out.empty(); ++i) {
    scratch.swap(out);
    merge_into(scratch, *lists[i], out, i == last ? cap : std::numeric_limits<size_t>::max());
  }
  return out.size() < cap;
}

bool used(const PartialMatch& m, VertexId v) { return std::find(m.begin(), m.end(), v) != m.end(); }

/** Checks that the mapped vertices of `m` are candidates and mutually consistent. */
bool seed_consistent(const QueryGraph& q, const RelationView& view, const PartialMatch& m,
                     const Exclusion& exclusion, Semantics sem) {
  std::vector<VertexId> buf;
  for (QVertex u = 0; u < q.vertex_count(); ++u) {
    if (m[u] == kNoVertex) continue;
    if (!view.admits(u, m[u])) return false;
    if (sem == Semantics::kIsomorphism) {
      for (QVertex w = u + 1; w < q.vertex_count(); ++w) {
        if (m[w] == m[u]) return false;
      }
    }
    for (QVertex w : q.neighbors(u)) {
      if (w < u || m[w] == kNoVertex) continue;
      view.extensions(u, m[u], w, buf);
      if (!std::binary_search(buf.begin(), buf.end(), m[w])) return false;
      if (exclusion.blocks(q.edge_id(u, w), m[u], m[w])) return false;
    }
  }
  return true;
}

class StaticEnumerator {
 public:
  StaticEnumerator(const QueryGraph& q, const MatchingOrder& order, const RelationView& view,
                   const Exclusion& exclusion, EnumContext& ctx)
      : q_(q), order_(order), view_(view), exclusion_(exclusion), ctx_(ctx),
        iso_(ctx.config().semantics == Semantics::kIsomorphism),
        lists_(q.vertex_count()), cand_(q.vertex_count()) {}

  void run(PartialMatch m, size_t start) {
    m_ = std::move(m);
    recurse(start);
  }

 private:
  void recurse(size_t i) {
    ctx_.tick();
    if (ctx_.stopped()) return;
    if (i == order_.size()) {
      ctx_.emit(m_);
      return;
    }
    const QVertex u = order_[i];
    auto earlier = order_.earlier(i);
    std::vector<VertexId>& cand = cand_[i];
    if (earlier.empty()) {
      view_.initial_candidates(u, cand);
    } else {
      auto& lists = lists_[i];
      lists.resize(earlier.size());
      std::vector<const std::vector<VertexId>*> ptrs;
      for (size_t j = 0; j < earlier.size(); ++j) {
        view_.extensions(earlier[j], m_[earlier[j]], u, lists[j]);
        ptrs.push_back(&lists[j]);
      }
      intersect_capped(ptrs, cand, scratch_, std::numeric_limits<size_t>::max());
    }
    if (cand.empty()) {
      if (i > 0) ++ctx_.counters().emp;
      return;
    }
    for (VertexId v : cand) {
      bool blocked = false;
      for (QVertex w : earlier) {
        if (exclusion_.blocks(q_.edge_id(w, u), m_[w], v)) {
          blocked = true;
          break;
        }
      }
      if (blocked) continue;
      if (iso_ && used(m_, v)) {
        ++ctx_.counters().vis;
        continue;
      }
      m_[u] = v;
      recurse(i + 1);
      m_[u] = kNoVertex;
      if (ctx_.stopped()) return;
    }
  }

  const QueryGraph& q_;
  const MatchingOrder& order_;
  const RelationView& view_;
  const Exclusion& exclusion_;
  EnumContext& ctx_;
  const bool iso_;
  PartialMatch m_;
  std::vector<std::vector<std::vector<VertexId>>> lists_;
  std::vector<std::vector<VertexId>> cand_;
  std::vector<VertexId> scratch_;
};

class DynamicEnumerator {
 public:
  DynamicEnumerator(const QueryGraph& q, const RelationView& view, const Exclusion& exclusion,
                    EnumContext& ctx)
      : q_(q), view_(view), exclusion_(exclusion), ctx_(ctx),
        iso_(ctx.config().semantics == Semantics::kIsomorphism),
        best_(q.vertex_count() + 1), trial_(q.vertex_count() + 1), lists_(q.vertex_count() + 1) {}

  void run(PartialMatch m) {
    m_ = std::move(m);
    size_t mapped = 0;
    for (VertexId v : m_) mapped += v != kNoVertex;
    recurse(mapped);
  }

 private:
  void recurse(size_t depth) {
    ctx_.tick();
    if (ctx_.stopped()) return;
    const size_t n = q_.vertex_count();
    if (depth == n) {
      ctx_.emit(m_);
      return;
    }
    std::vector<VertexId>& best = best_[depth];
    std::vector<VertexId>& trial = trial_[depth];
    QVertex pick = kNoVertex;
    size_t best_size = std::numeric_limits<size_t>::max();
    std::vector<QVertex> from;
    if (depth == 0) {
      for (QVertex u = 0; u < n; ++u) {
        view_.initial_candidates(u, trial);
        if (trial.size() < best_size) {
          best_size = trial.size();
          best.swap(trial);
          pick = u;
        }
      }
    } else {
      for (QVertex u = 0; u < n && best_size > 0; ++u) {
        if (m_[u] != kNoVertex) continue;
        from.clear();
        for (QVertex w : q_.neighbors(u)) {
          if (m_[w] != kNoVertex) from.push_back(w);
        }
        if (from.empty()) continue;
        auto& lists = lists_[depth];
        lists.resize(from.size());
        std::vector<const std::vector<VertexId>*> ptrs;
        for (size_t j = 0; j < from.size(); ++j) {
          view_.extensions(from[j], m_[from[j]], u, lists[j]);
          ptrs.push_back(&lists[j]);
        }
        if (intersect_capped(ptrs, trial, scratch_, best_size)) {
          best_size = trial.size();
          best.swap(trial);
          pick = u;
        }
      }
    }
    if (best_size == 0) {
      if (depth > 0) ++ctx_.counters().emp;
      return;
    }
    // `best` may be reused by deeper levels only through best_[depth + 1...].
    for (size_t idx = 0; idx < best_[depth].size(); ++idx) {
      const VertexId v = best_[depth][idx];
      bool blocked = false;
      for (QVertex w : q_.neighbors(pick)) {
        if (m_[w] != kNoVertex && exclusion_.blocks(q_.edge_id(w, pick), m_[w], v)) {
          blocked = true;
          break;
        }
      }
      if (blocked) continue;
      if (iso_ && used(m_, v)) {
        ++ctx_.counters().vis;
        continue;
      }
      m_[pick] = v;
      recurse(depth + 1);
      m_[pick] = kNoVertex;
      if (ctx_.stopped()) return;
    }
  }

  const QueryGraph& q_;
  const RelationView& view_;
  const Exclusion& exclusion_;
  EnumContext& ctx_;
  const bool iso_;
  PartialMatch m_;
  std::vector<std::vector<VertexId>> best_, trial_;
  std::vector<std::vector<std::vector<VertexId>>> lists_;
  std::vector<VertexId> scratch_;
};

}  // namespace

void intersect_sorted(std::vector<const std::vector<VertexId>*> lists, std::vector<VertexId>& out) {
  if (lists.empty()) {
    out.clear();
    return;
  }
  std::vector<VertexId> scratch;
  intersect_capped(lists, out, scratch, std::numeric_limits<size_t>::max());
}

std::vector<VertexId> local_candidates(const RelationView& view, const PartialMatch& m, QVertex u,
                                       std::span<const QVertex> from) {
  std::vector<std::vector<VertexId>> lists;
  for (QVertex w : from) {
    if (m[w] == kNoVertex) continue;
    view.extensions(w, m[w], u, lists.emplace_back());
  }
  std::vector<VertexId> out;
  if (lists.empty()) {
    view.initial_candidates(u, out);
    return out;
  }
  std::vector<const std::vector<VertexId>*> ptrs;
  for (auto& l : lists) ptrs.push_back(&l);
  intersect_sorted(ptrs, out);
  return out;
}

EnumStatus enumerate(const QueryGraph& q, const MatchingOrder& order, const RelationView& view,
                     const PartialMatch& seed, const Exclusion& exclusion, EnumContext& ctx) {
  ++ctx.counters().seeds;
  size_t prefix = 0;
  while (prefix < order.size() && seed[order[prefix]] != kNoVertex) ++prefix;
  for (size_t i = prefix; i < order.size(); ++i) {
    if (seed[order[i]] != kNoVertex) throw Error("seed must map a prefix of the matching order");
  }
  if (!seed_consistent(q, view, seed, exclusion, ctx.config().semantics)) return ctx.status();
  StaticEnumerator e(q, order, view, exclusion, ctx);
  e.run(seed, prefix);
  return ctx.status();
}

EnumStatus enumerate_dynamic(const QueryGraph& q, const RelationView& view, const PartialMatch& seed,
                             const Exclusion& exclusion, EnumContext& ctx) {
  ++ctx.counters().seeds;
  if (!seed_consistent(q, view, seed, exclusion, ctx.config().semantics)) return ctx.status();
  DynamicEnumerator e(q, view, exclusion, ctx);
  e.run(seed);
  return ctx.status();
}

}  // namespace csm
