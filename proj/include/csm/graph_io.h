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

// Text formats.
//
// Graph / query file:
//   v <id> <label>
//   e <src> <dst> <label>
// Stream file, one operation per line:
//   + <src> <dst> [<elabel> [<src label> <dst label>]]
//   - <src> <dst> [<elabel>]
// A line holding only "--" opens a batch; the next "--" closes it. Operations
// outside such a group are batches of one. '#' starts a comment, missing
// labels default to 0.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "csm/graph.h"

namespace csm {

/** Maps external vertex ids to dense ids and back. */
class IdMap {
 public:
  /** Dense id of `ext`, assigning the next free one if unseen. */
  VertexId intern(int64_t ext);
  /** Dense id of `ext` or kNoVertex. */
  VertexId find(int64_t ext) const;
  int64_t external(VertexId v) const { return ext_[v]; }
  size_t size() const { return ext_.size(); }
  bool identity() const;

  static IdMap identity_map(size_t n);

 private:
  std::unordered_map<int64_t, VertexId> dense_;
  std::vector<int64_t> ext_;
};

/** Raw contents of a graph file, edges kept in file order. */
struct GraphFile {
  std::vector<Label> vertex_labels;  // by dense id
  std::vector<Edge> edges;           // dense ids, file order
  IdMap ids;
};

GraphFile parse_graph(std::istream& in);
GraphFile read_graph_file(const std::string& path);

LabeledGraph to_graph(const GraphFile& f);
LabeledGraph load_graph(const std::string& path, IdMap* ids = nullptr);

/** Parses a stream. Unknown external ids are interned into `ids`. */
UpdateStream parse_stream(std::istream& in, IdMap& ids);
UpdateStream load_stream(const std::string& path, IdMap& ids);

void write_graph(std::ostream& out, const LabeledGraph& g);
void write_graph(std::ostream& out, const std::vector<Label>& labels, const std::vector<Edge>& edges);
void write_stream(std::ostream& out, const UpdateStream& stream);
void write_id_map(std::ostream& out, const IdMap& ids);

}  // namespace csm
