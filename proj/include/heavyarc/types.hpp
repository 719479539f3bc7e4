// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace heavyarc {

/// Index of a vertex in its digraph. The numeric order of the indices is the
/// implicit vertex order used by every sign computation.
using Vertex = std::uint32_t;

/// Sorted, duplicate-free list of vertices. Sorting by index means every
/// VertexSet already carries the implicit order.
using VertexSet = std::vector<Vertex>;

/// Value in {-1, 0, +1}.
using Sign = std::int8_t;

struct Arc {
  Vertex from = 0;
  Vertex to = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Malformed or inconsistent input to a library operation.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline VertexSet make_vertex_set(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

inline bool contains(const VertexSet& set, Vertex v) {
  return std::binary_search(set.begin(), set.end(), v);
}

inline bool is_subset(const VertexSet& sub, const VertexSet& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

inline VertexSet without(const VertexSet& set, Vertex v) {
  VertexSet out;
  out.reserve(set.size());
  for (Vertex u : set)
    if (u != v) out.push_back(u);
  return out;
}

}  // namespace heavyarc
