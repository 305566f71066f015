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

// Tree-query strategy with a constant-delay index.
//
// The global index keeps, per query vertex u, the data vertices that root a
// match of the subtree of u (bottom-up condition only). For an updated edge
// mapped to tree edge (u_x, u_y), u_x the parent, a local index narrows the
// vertices on the root path of u_x to those whose subtree match goes through
// the updated edge; everything else reuses the global sets. Enumerating from
// the root over the local index never reaches an empty candidate set under
// homomorphism.

#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "csm/candidate_index.h"
#include "csm/framework.h"
#include "csm/seeded_strategy.h"

namespace csm {

/** Local candidate sets for one seeded tree edge. */
class LocalIndex : public RelationView {
 public:
  /** Builds the overlay for tree edge (ux -> uy) mapped to (vx, vy). */
  LocalIndex(const QueryGraph& q, const LabeledGraph& g, const SpanningTree& t, const CandidateIndex& global,
             QVertex ux, QVertex uy, VertexId vx, VertexId vy);

  /** False when the overlay already shows there is no match. */
  bool viable() const { return viable_; }
  /** Overlay of u, or nullptr when u uses the global set. */
  const std::vector<VertexId>* overlay(QVertex u) const {
    return has_overlay_[u] ? &overlay_[u] : nullptr;
  }

  void extensions(QVertex from_u, VertexId from_v, QVertex to_u,
                  std::vector<VertexId>& out) const override;
  void initial_candidates(QVertex u, std::vector<VertexId>& out) const override;
  bool admits(QVertex u, VertexId v) const override;

 private:
  const QueryGraph& q_;
  const LabeledGraph& g_;
  const CandidateIndex& global_;
  QVertex ux_, uy_;
  VertexId vx_, vy_;
  std::vector<std::vector<VertexId>> overlay_;
  std::vector<bool> has_overlay_;
  bool viable_ = true;
};

class IeDynStrategy : public Strategy {
 public:
  explicit IeDynStrategy(StrategyOptions options = {}) : options_(options) {}

  std::string name() const override { return "dyn"; }
  Capabilities capabilities() const override;
  void build(const QueryGraph& q, const LabeledGraph& g) override;
  void on_vertex_added(const LabeledGraph& g, VertexId v) override { index_->add_vertex(g, v); }
  void on_vertex_relabeled(const LabeledGraph& g, VertexId v) override { index_->relabel_vertex(g, v); }
  void update_index(const LabeledGraph& g, std::span<const EdgeUpdate> batch, Op op) override;
  void find_matches(const LabeledGraph& g, const DeltaPlan& plan, std::span<const EdgeUpdate> batch,
                    EnumContext& ctx) override;
  std::vector<size_t> candidate_counts(const LabeledGraph& g) const override;
  double take_aux_index_seconds() override;

  const CandidateIndex& index() const { return *index_; }
  const SpanningTree& tree() const { return tree_; }
  const MatchingOrder& order() const { return order_; }

 private:
  StrategyOptions options_;
  SpanningTree tree_;
  MatchingOrder order_;
  std::unique_ptr<CandidateIndex> index_;
  double aux_seconds_ = 0;
};

}  // namespace csm
