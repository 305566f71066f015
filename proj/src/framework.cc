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

#include "csm/framework.h"

#include <algorithm>
#include <map>
#include <tuple>

namespace csm {

namespace {

double ms_since(Clock::time_point t) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t).count();
}

}  // namespace

bool DeltaPlan::empty() const {
  for (const auto& d : per_edge) {
    if (!d.empty()) return false;
  }
  return true;
}

DeltaPlan make_delta_plan(const QueryGraph& q, const LabeledGraph& g, std::span<const EdgeUpdate> batch,
                          Op op) {
  DeltaPlan plan;
  plan.op = op;
  plan.per_edge.resize(q.edge_count());
  for (const EdgeUpdate& u : batch) {
    plan.batch_edges.insert(u.key());
    const Label ls = g.label(u.src), ld = g.label(u.dst);
    for (size_t k = 0; k < q.edge_count(); ++k) {
      const QueryEdge& e = q.edge(k);
      if (e.label != u.label) continue;
      if (q.label(e.src) == ls && q.label(e.dst) == ld) plan.per_edge[k].push_back({u.src, u.dst, false});
      if (q.label(e.src) == ld && q.label(e.dst) == ls) plan.per_edge[k].push_back({u.dst, u.src, true});
    }
  }
  return plan;
}

PartialMatch seed_match(const QueryGraph& q, int k, const DeltaTuple& t) {
  PartialMatch m(q.vertex_count(), kNoVertex);
  m[q.edge(k).src] = t.src_v;
  m[q.edge(k).dst] = t.dst_v;
  return m;
}

std::pair<Batch, Batch> normalize_batch(const Batch& batch) {
  using Key = std::tuple<uint64_t, Label>;
  std::map<Key, std::pair<int, int>> count;  // deletions, insertions
  for (const EdgeUpdate& u : batch) {
    auto& c = count[{u.key(), u.label}];
    (u.op == Op::kDelete ? c.first : c.second) += 1;
  }
  std::map<Key, std::pair<int, int>> cancel;  // still to drop per sign
  for (const auto& [key, c] : count) {
    int n = std::min(c.first, c.second);
    if (n > 0) cancel[key] = {n, n};
  }
  Batch minus, plus;
  for (const EdgeUpdate& u : batch) {
    auto it = cancel.find({u.key(), u.label});
    if (it != cancel.end()) {
      int& left = u.op == Op::kDelete ? it->second.first : it->second.second;
      if (left > 0) {
        --left;
        continue;
      }
    }
    (u.op == Op::kDelete ? minus : plus).push_back(u);
  }
  sort_batch(minus);
  sort_batch(plus);
  return {std::move(minus), std::move(plus)};
}

std::vector<size_t> Strategy::candidate_counts(const LabeledGraph& g) const {
  std::vector<size_t> counts(query_ ? query_->vertex_count() : 0, 0);
  for (QVertex u = 0; u < counts.size(); ++u) {
    for (Label l : g.labels()) counts[u] += l == query_->label(u);
  }
  return counts;
}

const char* to_string(RunStatus s) {
  switch (s) {
    case RunStatus::kSolved: return "solved";
    case RunStatus::kUnsolved: return "unsolved";
    case RunStatus::kOutOfMemory: return "out-of-memory";
  }
  return "?";
}

// ---------------------------------------------------------------------------

StreamRunner::StreamRunner(const QueryGraph& q, LabeledGraph& g, Strategy& s, RunConfig config)
    : q_(q), g_(g), s_(s), config_(std::move(config)), caps_(s.capabilities()) {
  if (config_.limit_per_update != 0 && !caps_.early_termination) {
    throw CapabilityError(s.name() + " cannot stop after a fixed number of results");
  }
  s_.set_tag_slot(&tag_);
}

void StreamRunner::build() {
  auto t0 = Clock::now();
  try {
    s_.build(q_, g_);
  } catch (const MemoryCapExceeded&) {
    totals_.status = RunStatus::kOutOfMemory;
  }
  totals_.offline_ms = ms_since(t0);
  if (config_.time_limit_s) {
    deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                   std::chrono::duration<double>(*config_.time_limit_s));
  }
  built_ = true;
}

void StreamRunner::check_capabilities(const Batch& minus, const Batch& plus) const {
  if (!minus.empty() && !caps_.edge_delete) throw CapabilityError(s_.name() + " does not support edge deletion");
  if (!plus.empty() && !caps_.edge_insert) throw CapabilityError(s_.name() + " does not support edge insertion");
}

void StreamRunner::run_phase(std::span<const EdgeUpdate> part, Op op, int phase, UpdateResult& r) {
  if (halted()) return;
  DeltaPlan plan = make_delta_plan(q_, g_, part, op);

  EnumerationConfig ec;
  ec.semantics = config_.semantics;
  ec.deadline = deadline_;
  bool skip_enum = plan.empty();
  if (config_.limit_per_update != 0) {
    if (r.counters.results >= config_.limit_per_update) {
      skip_enum = true;
    } else {
      ec.limit = config_.limit_per_update - r.counters.results;
    }
  }
  Counters c;
  EnumContext ctx(ec, c);
  ctx.set_sink([&](std::span<const VertexId> m) {
    DeltaMatch dm{op, phase, tag_, Match(m.begin(), m.end())};
    if (config_.on_match) config_.on_match(dm);
    if (config_.keep_matches) r.matches.push_back(std::move(dm));
  });

  double index_ms = 0, enum_ms = 0;
  auto enumerate_part = [&] {
    if (skip_enum) return;
    tag_ = -1;
    auto t = Clock::now();
    s_.find_matches(g_, plan, part, ctx);
    double aux = s_.take_aux_index_seconds() * 1e3;
    double total = ms_since(t);
    enum_ms += total - aux;
    index_ms += aux;
  };
  auto update_part = [&] {
    auto t = Clock::now();
    s_.update_index(g_, part, op);
    index_ms += ms_since(t);
  };

  try {
    if (op == Op::kInsert) {
      for (const EdgeUpdate& u : part) apply_update(g_, u);
      update_part();
      enumerate_part();
    } else {
      enumerate_part();
      for (const EdgeUpdate& u : part) apply_update(g_, u);
      update_part();
    }
  } catch (const MemoryCapExceeded&) {
    totals_.status = RunStatus::kOutOfMemory;
  }

  totals_.index_ms += index_ms;
  totals_.enum_ms += enum_ms;
  totals_.update_ms.back() += index_ms + enum_ms;
  r.counters += c;
  totals_.counters += c;
  if (ctx.status() == EnumStatus::kBudgetExceeded ||
      (deadline_ && totals_.status == RunStatus::kSolved && Clock::now() >= *deadline_)) {
    r.status = EnumStatus::kBudgetExceeded;
    if (totals_.status == RunStatus::kSolved) totals_.status = RunStatus::kUnsolved;
  } else if (ctx.status() == EnumStatus::kLimitReached) {
    r.status = EnumStatus::kLimitReached;
  }
}

UpdateResult StreamRunner::process(const Batch& batch) {
  UpdateResult r;
  int phase = 0;
  process_into(batch, r, phase, true);
  return r;
}

void StreamRunner::process_into(const Batch& batch, UpdateResult& r, int& phase, bool new_update) {
  if (!built_) build();
  if (halted()) {
    r.status = EnumStatus::kBudgetExceeded;
    return;
  }
  auto [minus, plus] = normalize_batch(batch);
  check_capabilities(minus, plus);
  if (new_update) totals_.update_ms.push_back(0);
  auto run = [&](const Batch& part, Op op) {
    if (part.empty()) return;
    if (caps_.batch) {
      run_phase(part, op, phase++, r);
    } else {
      for (const EdgeUpdate& u : part) run_phase(std::span(&u, 1), op, phase++, r);
    }
  };
  run(minus, Op::kDelete);
  if (!plus.empty()) {
    auto t = Clock::now();
    for (VertexId v : create_missing_vertices(g_, plus)) s_.on_vertex_added(g_, v);
    double ms = ms_since(t);
    totals_.index_ms += ms;
    totals_.update_ms.back() += ms;
  }
  run(plus, Op::kInsert);
}

UpdateResult StreamRunner::insert_vertex(Label label, const std::vector<std::pair<VertexId, Label>>& edges) {
  if (!caps_.vertex_insert) throw CapabilityError(s_.name() + " does not support vertex insertion");
  const VertexId v = static_cast<VertexId>(g_.vertex_count());
  if (edges.empty()) {
    if (!built_) build();
    g_.add_vertex(label);
    s_.on_vertex_added(g_, v);
    return {};
  }
  Batch b;
  for (auto [w, el] : edges) b.push_back(EdgeUpdate{Op::kInsert, v, w, el, label, std::nullopt});
  return process(b);
}

Batch StreamRunner::incident_edges(VertexId v, Op op) const {
  Batch b;
  for (const Neighbor& n : g_.adjacency(v)) b.push_back(EdgeUpdate{op, v, n.id, n.label, {}, {}});
  return b;
}

UpdateResult StreamRunner::delete_vertex(VertexId v) {
  if (!caps_.vertex_delete) throw CapabilityError(s_.name() + " does not support vertex deletion");
  // Dense ids stay allocated; the vertex is left isolated.
  return process(incident_edges(v, Op::kDelete));
}

UpdateResult StreamRunner::relabel_edge(VertexId a, VertexId b, Label label) {
  if (!caps_.label_update) throw CapabilityError(s_.name() + " does not support label updates");
  auto old = g_.edge_label(a, b);
  if (!old) throw GraphError(GraphError::Kind::kMissingEdge, "relabel of a missing edge");
  return process(Batch{EdgeUpdate{Op::kDelete, a, b, *old, {}, {}}, EdgeUpdate{Op::kInsert, a, b, label, {}, {}}});
}

UpdateResult StreamRunner::relabel_vertex(VertexId v, Label label) {
  if (!caps_.label_update) throw CapabilityError(s_.name() + " does not support label updates");
  Batch reinsert = incident_edges(v, Op::kInsert);
  UpdateResult r;
  int phase = 0;
  process_into(incident_edges(v, Op::kDelete), r, phase, true);
  if (halted()) return r;
  auto t = Clock::now();
  g_.set_label(v, label);
  s_.on_vertex_relabeled(g_, v);
  double ms = ms_since(t);
  totals_.index_ms += ms;
  totals_.update_ms.back() += ms;
  process_into(reinsert, r, phase, false);
  return r;
}

StreamOutcome run_stream(const QueryGraph& q, LabeledGraph& g, const UpdateStream& stream, Strategy& s,
                         RunConfig config) {
  StreamOutcome out;
  StreamRunner runner(q, g, s, std::move(config));
  runner.build();
  for (const Batch& b : stream) {
    if (runner.halted()) break;
    out.updates.push_back(runner.process(b));
  }
  out.totals = runner.totals();
  return out;
}

}  // namespace csm
