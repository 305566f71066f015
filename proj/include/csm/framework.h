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

// Incremental view maintenance loop shared by all strategies.
//
// Per batch of insertions: apply to G, update the index, find positive
// matches. Per batch of deletions: find negative matches, apply to G, update
// the index. A mixed batch is normalized into its deletions followed by its
// insertions. Strategies that only handle single updates receive the batch
// one edge at a time.
//
// The incremental matches of a batch are split by the query edge k that the
// new edges are joined through: component k joins the updated relations of
// edges < k, the delta of edge k, and the unchanged part of edges > k, so the
// components are disjoint.

#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "csm/enumerator.h"
#include "csm/graph.h"
#include "csm/query.h"

namespace csm {

struct Capabilities {
  bool edge_insert = true;
  bool edge_delete = true;
  bool vertex_insert = true;
  bool vertex_delete = true;
  bool label_update = true;
  bool batch = false;
  bool early_termination = true;
  bool tree_queries_only = false;
};

/** A data edge tuple of the delta relation of one query edge. The query edge's
 *  src maps to `src_v`. `reversed` is set when the update was written with its
 *  endpoints the other way round. */
struct DeltaTuple {
  VertexId src_v;
  VertexId dst_v;
  bool reversed;
};

struct DeltaPlan {
  Op op = Op::kInsert;
  std::vector<std::vector<DeltaTuple>> per_edge;  // by canonical edge index
  std::unordered_set<uint64_t> batch_edges;

  Exclusion exclusion(int k) const { return Exclusion{k, &batch_edges}; }
  bool empty() const;
};

/** Delta relations of every query edge for the (single-sign) batch. Labels
 *  are read from g. */
DeltaPlan make_delta_plan(const QueryGraph& q, const LabeledGraph& g, std::span<const EdgeUpdate> batch,
                          Op op);

/** Seeds query edge k with a delta tuple. */
PartialMatch seed_match(const QueryGraph& q, int k, const DeltaTuple& t);

/** Splits a batch into deletions and insertions. An edge that is both deleted
 *  and inserted with the same label cancels out. */
std::pair<Batch, Batch> normalize_batch(const Batch& batch);

/**
 * One continuous subgraph matching algorithm.
 */
class Strategy {
 public:
  virtual ~Strategy() = default;

  virtual std::string name() const = 0;
  virtual Capabilities capabilities() const = 0;

  /** Offline phase: matching orders and the initial index over g. */
  virtual void build(const QueryGraph& q, const LabeledGraph& g) = 0;
  /** A vertex (without edges) was appended to g. */
  virtual void on_vertex_added(const LabeledGraph& g, VertexId v) {
    (void)g;
    (void)v;
  }
  /** The label of isolated vertex v changed. */
  virtual void on_vertex_relabeled(const LabeledGraph& g, VertexId v) {
    (void)g;
    (void)v;
  }
  /** g already reflects `batch`. */
  virtual void update_index(const LabeledGraph& g, std::span<const EdgeUpdate> batch, Op op) {
    (void)g;
    (void)batch;
    (void)op;
  }
  /** Emits incremental matches through ctx. For insertions g includes the
   *  batch; for deletions it does not yet exclude it. Before emitting matches
   *  of component k the strategy calls ctx_tag(k). */
  virtual void find_matches(const LabeledGraph& g, const DeltaPlan& plan,
                            std::span<const EdgeUpdate> batch, EnumContext& ctx) = 0;

  /** Candidates per query vertex kept by the strategy's index; label
   *  matches when there is no index. */
  virtual std::vector<size_t> candidate_counts(const LabeledGraph& g) const;
  /** Time spent in per-update auxiliary structures during find_matches. */
  virtual double take_aux_index_seconds() { return 0; }

  void set_tag_slot(int* slot) { tag_ = slot; }

 protected:
  void ctx_tag(int k) {
    if (tag_) *tag_ = k;
  }
  const QueryGraph* query_ = nullptr;

 private:
  int* tag_ = nullptr;
};

struct DeltaMatch {
  Op sign;
  int phase;  // sub-batch within the update
  int k;      // component; -1 when the strategy does not attribute one
  Match match;
};

enum class RunStatus { kSolved, kUnsolved, kOutOfMemory };
const char* to_string(RunStatus s);

struct RunConfig {
  Semantics semantics = Semantics::kHomomorphism;
  uint64_t limit_per_update = 0;          // 0: unlimited
  std::optional<double> time_limit_s;     // online processing budget
  bool keep_matches = true;
  std::function<void(const DeltaMatch&)> on_match;
};

struct UpdateResult {
  std::vector<DeltaMatch> matches;
  Counters counters;
  EnumStatus status = EnumStatus::kComplete;
};

struct RunTotals {
  RunStatus status = RunStatus::kSolved;
  double offline_ms = 0;
  double index_ms = 0;
  double enum_ms = 0;
  Counters counters;
  std::vector<double> update_ms;  // index + enumeration time per update
};

/** Drives one strategy over one graph and stream. */
class StreamRunner {
 public:
  StreamRunner(const QueryGraph& q, LabeledGraph& g, Strategy& s, RunConfig config);

  void build();
  UpdateResult process(const Batch& batch);

  UpdateResult insert_vertex(Label label, const std::vector<std::pair<VertexId, Label>>& edges);
  UpdateResult delete_vertex(VertexId v);
  UpdateResult relabel_edge(VertexId a, VertexId b, Label label);
  UpdateResult relabel_vertex(VertexId v, Label label);

  const RunTotals& totals() const { return totals_; }
  /** Set once the time budget ran out or the strategy exceeded its memory cap. */
  bool halted() const { return totals_.status != RunStatus::kSolved; }
  const LabeledGraph& graph() const { return g_; }

 private:
  void process_into(const Batch& batch, UpdateResult& r, int& phase, bool new_update);
  void run_phase(std::span<const EdgeUpdate> part, Op op, int phase, UpdateResult& r);
  Batch incident_edges(VertexId v, Op op) const;
  void check_capabilities(const Batch& minus, const Batch& plus) const;

  const QueryGraph& q_;
  LabeledGraph& g_;
  Strategy& s_;
  RunConfig config_;
  Capabilities caps_;
  std::optional<Clock::time_point> deadline_;
  RunTotals totals_;
  int tag_ = -1;
  bool built_ = false;
};

struct StreamOutcome {
  RunTotals totals;
  std::vector<UpdateResult> updates;
};

/** Builds the strategy and processes every batch until done or halted. */
StreamOutcome run_stream(const QueryGraph& q, LabeledGraph& g, const UpdateStream& stream, Strategy& s,
                         RunConfig config);

}  // namespace csm
