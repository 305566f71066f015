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

// Recompute-and-diff strategy. Every match that uses the updated edge e(a, b)
// lies within distance diameter(q) of both a and b, so matching is rerun on
// that neighborhood with and without the edge and the results are diffed.

#pragma once

#include <vector>

#include "csm/framework.h"

namespace csm {

/** Vertices within `radius` hops of both a and b, sorted. */
std::vector<VertexId> shared_ball(const LabeledGraph& g, VertexId a, VertexId b, size_t radius);

class IncIsoMatchStrategy : public Strategy {
 public:
  std::string name() const override { return "im"; }
  Capabilities capabilities() const override;
  void build(const QueryGraph& q, const LabeledGraph& g) override;
  void find_matches(const LabeledGraph& g, const DeltaPlan& plan, std::span<const EdgeUpdate> batch,
                    EnumContext& ctx) override;

  size_t radius() const { return radius_; }

 private:
  size_t radius_ = 0;
  MatchingOrder order_;
};

}  // namespace csm
