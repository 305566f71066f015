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

#pragma once

#include <functional>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "csm/graph.h"
#include "csm/query.h"

namespace csm {

/** A permutation of the query vertices in which every vertex after the first
 *  has an earlier neighbor. */
class MatchingOrder {
 public:
  MatchingOrder() = default;
  /** Throws Error if `order` is not a connected permutation. */
  MatchingOrder(const QueryGraph& q, std::vector<QVertex> order);

  size_t size() const { return order_.size(); }
  QVertex operator[](size_t i) const { return order_[i]; }
  const std::vector<QVertex>& vertices() const { return order_; }
  size_t position(QVertex u) const { return pos_[u]; }
  /** Neighbors of order[i] placed before it. */
  std::span<const QVertex> earlier(size_t i) const { return earlier_[i]; }

 private:
  std::vector<QVertex> order_;
  std::vector<size_t> pos_;
  std::vector<std::vector<QVertex>> earlier_;
};

/**
 * Source of candidate lists. Implementations read the data graph directly or
 * restrict it with an auxiliary index.
 */
class RelationView {
 public:
  virtual ~RelationView() = default;
  /** Sorted w with (from_v, w) in the relation of query edge (from_u, to_u),
   *  restricted to the view's candidates of to_u. */
  virtual void extensions(QVertex from_u, VertexId from_v, QVertex to_u,
                          std::vector<VertexId>& out) const = 0;
  /** Candidates for `u` when no neighbor of it is mapped. Sorted. */
  virtual void initial_candidates(QVertex u, std::vector<VertexId>& out) const = 0;
  /** Whether v is a candidate of u. */
  virtual bool admits(QVertex u, VertexId v) const = 0;
};

/** Candidates straight from the data graph: label and edge label checks only. */
class GraphView : public RelationView {
 public:
  GraphView(const QueryGraph& q, const LabeledGraph& g) : q_(q), g_(g) {}
  void extensions(QVertex from_u, VertexId from_v, QVertex to_u,
                  std::vector<VertexId>& out) const override;
  void initial_candidates(QVertex u, std::vector<VertexId>& out) const override;
  bool admits(QVertex u, VertexId v) const override;

 private:
  const QueryGraph& q_;
  const LabeledGraph& g_;
};

struct Counters {
  uint64_t results = 0;
  uint64_t emp = 0;  // partial results whose local candidate set was empty
  uint64_t vis = 0;  // candidates skipped because they were already mapped
  uint64_t recursions = 0;
  uint64_t seeds = 0;  // enumerations started

  uint64_t invalid() const { return emp + vis; }
  Counters& operator+=(const Counters& o);
};

/**
 * Data edges that must not be used by query edges with a canonical index
 * greater than `after_edge`. Realizes the (R_i - dR_i) terms of an incremental
 * join.
 */
struct Exclusion {
  int after_edge = -1;
  const std::unordered_set<uint64_t>* edges = nullptr;

  bool blocks(int edge_index, VertexId a, VertexId b) const {
    return edges != nullptr && edge_index > after_edge && edges->contains(edge_key(a, b));
  }
};

enum class EnumStatus { kComplete, kLimitReached, kBudgetExceeded };

struct EnumerationConfig {
  Semantics semantics = Semantics::kHomomorphism;
  uint64_t limit = 0;  // 0: unlimited
  std::optional<Clock::time_point> deadline;
  uint32_t poll_interval = 1024;
};

using MatchCallback = std::function<void(std::span<const VertexId>)>;

/** State shared by all enumerations that belong to one update. */
class EnumContext {
 public:
  EnumContext(EnumerationConfig config, Counters& counters, MatchCallback sink = {})
      : config_(config), counters_(counters), sink_(std::move(sink)) {}

  const EnumerationConfig& config() const { return config_; }
  Counters& counters() { return counters_; }
  EnumStatus status() const { return status_; }
  bool stopped() const { return status_ != EnumStatus::kComplete; }
  void set_sink(MatchCallback sink) { sink_ = std::move(sink); }

  void emit(std::span<const VertexId> m);
  /** Counts a recursion step; checks the deadline every poll_interval steps. */
  void tick();
  void stop(EnumStatus s) { status_ = s; }

 private:
  EnumerationConfig config_;
  Counters& counters_;
  MatchCallback sink_;
  EnumStatus status_ = EnumStatus::kComplete;
  uint64_t emitted_ = 0;
  uint32_t since_poll_ = 0;
};

/** Query-vertex indexed partial mapping; kNoVertex marks unmapped. */
using PartialMatch = std::vector<VertexId>;

/**
 * Vertex-at-a-time backtracking along a static order. `seed` maps a (possibly
 * empty) prefix of the order. Local candidates are the intersection of the
 * extension lists from every earlier neighbor.
 */
EnumStatus enumerate(const QueryGraph& q, const MatchingOrder& order, const RelationView& view,
                     const PartialMatch& seed, const Exclusion& exclusion, EnumContext& ctx);

/**
 * Backtracking that always extends the frontier vertex with the fewest local
 * candidates (ties: smaller id). Candidates intersect over every mapped
 * neighbor.
 */
EnumStatus enumerate_dynamic(const QueryGraph& q, const RelationView& view, const PartialMatch& seed,
                             const Exclusion& exclusion, EnumContext& ctx);

/** Intersection of the extension lists of u from the mapped vertices in `from`. */
std::vector<VertexId> local_candidates(const RelationView& view, const PartialMatch& m, QVertex u,
                                       std::span<const QVertex> from);

/** k-way intersection of sorted lists, smallest list first. */
void intersect_sorted(std::vector<const std::vector<VertexId>*> lists, std::vector<VertexId>& out);

}  // namespace csm
