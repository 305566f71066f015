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

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace csm {

using VertexId = uint32_t;
using QVertex = uint32_t;
using Label = uint32_t;

inline constexpr VertexId kNoVertex = ~VertexId{0};

using Clock = std::chrono::steady_clock;

enum class Semantics { kHomomorphism, kIsomorphism };

inline const char* to_string(Semantics s) { return s == Semantics::kHomomorphism ? "homo" : "iso"; }

/** Base of everything this library throws on bad input or misuse. */
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GraphError : public Error {
 public:
  enum class Kind { kDuplicateEdge, kMissingEdge, kUnknownVertex, kSelfLoop };
  GraphError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class ParseError : public Error {
 public:
  ParseError(size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  size_t line() const { return line_; }

 private:
  size_t line_;
};

/** An operation the selected strategy does not support (Table of capabilities). */
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/** A cached-result structure outgrew its configured tuple cap. */
class MemoryCapExceeded : public Error {
 public:
  using Error::Error;
};

/** Unordered data edge key, smaller endpoint in the high word. */
inline uint64_t edge_key(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (uint64_t{a} << 32) | b;
}

using Match = std::vector<VertexId>;

}  // namespace csm
