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

// Reference matcher used to check every other component. It walks query
// vertices in id order and verifies each edge with a point lookup.

#pragma once

#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "csm/graph.h"
#include "csm/query.h"

namespace csm {

using MatchSet = std::set<Match>;

struct SignedMatches {
  MatchSet positive;
  MatchSet negative;
};

inline constexpr size_t kOracleMaxQueryVertices = 8;
inline constexpr size_t kOracleMaxDataVertices = 64;

/** All matches of q in g. Refuses inputs above the oracle size guard. */
MatchSet oracle_matches(const QueryGraph& q, const LabeledGraph& g, Semantics sem);

/** Matches of g_after minus g_before (positive) and the reverse (negative). */
SignedMatches oracle_delta(const QueryGraph& q, const LabeledGraph& g_before,
                           const LabeledGraph& g_after, Semantics sem);

/** Ordered pairs (v, v') that some match maps query edge k to (src -> v). */
std::set<std::pair<VertexId, VertexId>> complete_relation(const QueryGraph& q, const LabeledGraph& g,
                                                          size_t k, Semantics sem);

/** Per query vertex: data vertices that appear at that vertex in some match. */
std::vector<std::set<VertexId>> match_projection(const QueryGraph& q, const MatchSet& matches);

/**
 * The unguarded matcher behind the oracle. Calls `visit` per match; stops and
 * returns false when `deadline` passes.
 */
bool brute_force_matches(const QueryGraph& q, const LabeledGraph& g, Semantics sem,
                         const std::function<void(const Match&)>& visit,
                         std::optional<Clock::time_point> deadline = std::nullopt);

}  // namespace csm
