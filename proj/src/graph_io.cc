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

#include "csm/graph_io.h"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

namespace csm {

VertexId IdMap::intern(int64_t ext) {
  auto [it, inserted] = dense_.try_emplace(ext, static_cast<VertexId>(ext_.size()));
  if (inserted) ext_.push_back(ext);
  return it->second;
}

VertexId IdMap::find(int64_t ext) const {
  auto it = dense_.find(ext);
  return it == dense_.end() ? kNoVertex : it->second;
}

bool IdMap::identity() const {
  for (size_t i = 0; i < ext_.size(); ++i) {
    if (ext_[i] != static_cast<int64_t>(i)) return false;
  }
  return true;
}

IdMap IdMap::identity_map(size_t n) {
  IdMap m;
  for (size_t i = 0; i < n; ++i) m.intern(static_cast<int64_t>(i));
  return m;
}

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string_view> tok;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tok.push_back(line.substr(i, j - i));
    i = j;
  }
  return tok;
}

template <typename T>
T number(std::string_view s, size_t line_no) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(s) + "'");
  }
  if constexpr (std::is_signed_v<T>) {
    if (value < 0) throw ParseError(line_no, "negative id '" + std::string(s) + "'");
  }
  return value;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return in;
}

}  // namespace

GraphFile parse_graph(std::istream& in) {
  GraphFile f;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tok = tokenize(line);
    if (tok.empty()) continue;
    if (tok[0] == "v") {
      if (tok.size() < 2 || tok.size() > 3) throw ParseError(line_no, "expected 'v id [label]'");
      auto ext = number<int64_t>(tok[1], line_no);
      if (f.ids.find(ext) != kNoVertex) throw ParseError(line_no, "vertex declared twice");
      f.ids.intern(ext);
      f.vertex_labels.push_back(tok.size() == 3 ? number<Label>(tok[2], line_no) : 0);
    } else if (tok[0] == "e") {
      if (tok.size() < 3 || tok.size() > 4) throw ParseError(line_no, "expected 'e src dst [label]'");
      VertexId a = f.ids.find(number<int64_t>(tok[1], line_no));
      VertexId b = f.ids.find(number<int64_t>(tok[2], line_no));
      if (a == kNoVertex || b == kNoVertex) throw ParseError(line_no, "edge references an undeclared vertex");
      f.edges.push_back(Edge{a, b, tok.size() == 4 ? number<Label>(tok[3], line_no) : 0});
    } else {
      throw ParseError(line_no, "unknown record '" + std::string(tok[0]) + "'");
    }
  }
  return f;
}

GraphFile read_graph_file(const std::string& path) {
  auto in = open(path);
  return parse_graph(in);
}

LabeledGraph to_graph(const GraphFile& f) {
  LabeledGraph g(f.vertex_labels);
  for (const Edge& e : f.edges) g.insert_edge(e.src, e.dst, e.label);
  return g;
}

LabeledGraph load_graph(const std::string& path, IdMap* ids) {
  GraphFile f = read_graph_file(path);
  LabeledGraph g = to_graph(f);
  if (ids) *ids = std::move(f.ids);
  return g;
}

UpdateStream parse_stream(std::istream& in, IdMap& ids) {
  UpdateStream stream;
  Batch group;
  bool in_group = false;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tok = tokenize(line);
    if (tok.empty()) continue;
    if (tok[0] == "--" && tok.size() == 1) {
      if (in_group && !group.empty()) stream.push_back(std::move(group));
      group.clear();
      in_group = !in_group;
      continue;
    }
    EdgeUpdate u;
    if (tok[0] == "+") {
      u.op = Op::kInsert;
    } else if (tok[0] == "-") {
      u.op = Op::kDelete;
    } else {
      throw ParseError(line_no, "expected '+' or '-'");
    }
    size_t n = tok.size();
    bool ok = u.op == Op::kInsert ? (n == 3 || n == 4 || n == 6) : (n == 3 || n == 4);
    if (!ok) throw ParseError(line_no, "wrong number of fields");
    u.src = ids.intern(number<int64_t>(tok[1], line_no));
    u.dst = ids.intern(number<int64_t>(tok[2], line_no));
    if (u.src == u.dst) throw ParseError(line_no, "self loop");
    if (n >= 4) u.label = number<Label>(tok[3], line_no);
    if (n == 6) {
      u.src_label = number<Label>(tok[4], line_no);
      u.dst_label = number<Label>(tok[5], line_no);
    }
    if (in_group) {
      group.push_back(u);
    } else {
      stream.push_back(Batch{u});
    }
  }
  if (!group.empty()) stream.push_back(std::move(group));
  return stream;
}

UpdateStream load_stream(const std::string& path, IdMap& ids) {
  auto in = open(path);
  return parse_stream(in, ids);
}

void write_graph(std::ostream& out, const std::vector<Label>& labels, const std::vector<Edge>& edges) {
  for (size_t v = 0; v < labels.size(); ++v) out << "v " << v << ' ' << labels[v] << '\n';
  for (const Edge& e : edges) out << "e " << e.src << ' ' << e.dst << ' ' << e.label << '\n';
}

void write_graph(std::ostream& out, const LabeledGraph& g) { write_graph(out, g.labels(), g.edges()); }

void write_stream(std::ostream& out, const UpdateStream& stream) {
  for (const Batch& b : stream) {
    if (b.size() > 1) out << "--\n";
    for (const EdgeUpdate& u : b) {
      out << op_char(u.op) << ' ' << u.src << ' ' << u.dst << ' ' << u.label;
      if (u.op == Op::kInsert && u.src_label && u.dst_label) {
        out << ' ' << *u.src_label << ' ' << *u.dst_label;
      }
      out << '\n';
    }
    if (b.size() > 1) out << "--\n";
  }
}

void write_id_map(std::ostream& out, const IdMap& ids) {
  for (VertexId v = 0; v < ids.size(); ++v) out << v << ' ' << ids.external(v) << '\n';
}

}  // namespace csm
