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

#include <span>
#include <vector>

#include "csm/common.h"

namespace csm {

/** Row-major table of data vertices; column i holds query vertex schema[i]. */
struct Relation {
  std::vector<QVertex> schema;
  std::vector<VertexId> cells;

  size_t arity() const { return schema.size(); }
  size_t size() const { return schema.empty() ? 0 : cells.size() / schema.size(); }
  std::span<const VertexId> row(size_t i) const { return {cells.data() + i * arity(), arity()}; }
  void add(std::span<const VertexId> r) { cells.insert(cells.end(), r.begin(), r.end()); }
  /** Column of query vertex u, or -1. */
  int column(QVertex u) const;
};

/**
 * Natural join on the shared schema attributes; output schema is the left
 * schema followed by the right-only attributes. Under isomorphism, rows that
 * map two query vertices to one data vertex are dropped.
 */
Relation hash_join(const Relation& left, const Relation& right, Semantics sem);

/** True when no data vertex repeats in the row. */
bool injective(std::span<const VertexId> row);

}  // namespace csm
