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

// Fixtures and randomized instances shared by the unit and acceptance tests.

#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "csm/framework.h"
#include "csm/graph.h"
#include "csm/oracle.h"
#include "csm/query.h"
#include "csm/seeded_strategy.h"

namespace csm::testing {

std::string data_path(const std::string& name);

/** Running example graph and 4-cycle query. */
LabeledGraph fig1_graph();
QueryGraph fig1_query();
/** The 4-cycle without e(u2, u3): a tree rooted at u0. */
QueryGraph fig1_tree_query();

/** One stream step. */
struct StreamOp {
  enum Kind { kBatch, kDeleteVertex, kRelabelVertex, kRelabelEdge };
  Kind kind = kBatch;
  Batch batch;
  VertexId v = 0, w = 0;
  Label label = 0;
};

struct Instance {
  QueryGraph q;
  LabeledGraph g;
  std::vector<StreamOp> ops;
  bool extracted = false;
};

struct InstanceParams {
  size_t min_data = 8, max_data = 30;
  size_t max_labels = 4, max_edge_labels = 2;
  size_t max_query = 6;
  size_t max_ops = 50;
  bool insert_only = false;
  bool tree_only = false;
  bool batches = true;
  double batch_rate = 0.1;
};

Instance random_instance(std::mt19937_64& rng, const InstanceParams& p);
/** Random connected query with n vertices of the given class. */
QueryGraph random_query(std::mt19937_64& rng, size_t n, QueryClass cls, size_t labels, size_t edge_labels);
/** Random graph with edge probability p. */
LabeledGraph random_graph(std::mt19937_64& rng, size_t n, double p, size_t labels, size_t edge_labels);

/** Applies an op to a plain graph the way the runner does. */
void apply_op(LabeledGraph& g, const StreamOp& op);
/** Applies an op through the runner. */
UpdateResult run_op(StreamRunner& runner, const StreamOp& op);
/** Oracle delta of every op. */
std::vector<SignedMatches> expected_deltas(const Instance& inst, Semantics sem);

/** Net matches of an update; duplicates within a (phase, sign) are reported. */
SignedMatches net_matches(const UpdateResult& r, size_t* duplicates = nullptr);

struct StrategyCheck {
  size_t updates = 0;
  size_t mismatches = 0;
  size_t emp_updates = 0;  // updates with EMP > 0
  Counters totals;
  std::string first_failure;
};

using UpdateHook = std::function<void(Strategy&, const LabeledGraph&, size_t op_index)>;

/** Runs `algo` over the instance and compares every update with `expected`. */
StrategyCheck check_strategy(const Instance& inst, const std::vector<SignedMatches>& expected,
                             const std::string& algo, Semantics sem, StrategyOptions options = {},
                             const UpdateHook& hook = {});

std::string describe(const Match& m);

}  // namespace csm::testing
