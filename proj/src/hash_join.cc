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

#include "csm/hash_join.h"

#include <algorithm>
#include <unordered_map>

namespace csm {

int Relation::column(QVertex u) const {
  auto it = std::find(schema.begin(), schema.end(), u);
  return it == schema.end() ? -1 : static_cast<int>(it - schema.begin());
}

bool injective(std::span<const VertexId> row) {
  for (size_t i = 0; i < row.size(); ++i) {
    for (size_t j = i + 1; j < row.size(); ++j) {
      if (row[i] == row[j]) return false;
    }
  }
  return true;
}

namespace {

struct KeyHash {
  size_t operator()(const std::vector<VertexId>& k) const {
    size_t h = 0xcbf29ce484222325ull;
    for (VertexId v : k) h = (h ^ v) * 0x100000001b3ull;
    return h;
  }
};

}  // namespace

Relation hash_join(const Relation& left, const Relation& right, Semantics sem) {
  std::vector<int> lkey, rkey, rrest;
  for (size_t j = 0; j < right.arity(); ++j) {
    int c = left.column(right.schema[j]);
    if (c >= 0) {
      lkey.push_back(c);
      rkey.push_back(static_cast<int>(j));
    } else {
      rrest.push_back(static_cast<int>(j));
    }
  }
  Relation out;
  out.schema = left.schema;
  for (int j : rrest) out.schema.push_back(right.schema[j]);

  std::unordered_multimap<std::vector<VertexId>, size_t, KeyHash> table;
  std::vector<VertexId> key;
  for (size_t i = 0; i < right.size(); ++i) {
    auto r = right.row(i);
    key.clear();
    for (int c : rkey) key.push_back(r[c]);
    table.emplace(key, i);
  }
  std::vector<VertexId> row;
  for (size_t i = 0; i < left.size(); ++i) {
    auto l = left.row(i);
    key.clear();
    for (int c : lkey) key.push_back(l[c]);
    auto [lo, hi] = table.equal_range(key);
    for (auto it = lo; it != hi; ++it) {
      auto r = right.row(it->second);
      row.assign(l.begin(), l.end());
      for (int j : rrest) row.push_back(r[j]);
      if (sem == Semantics::kIsomorphism && !injective(row)) continue;
      out.add(row);
    }
  }
  return out;
}

}  // namespace csm
