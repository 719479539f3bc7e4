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

#include <cstddef>
#include <limits>
#include <queue>
#include <span>
#include <vector>

#include "heavyarc/types.hpp"

namespace heavyarc::detail {

// Maximum number of vertex-disjoint paths that start in distinct vertices of
// `sources` and end in `targets`, computed as a unit-capacity max flow on the
// vertex-split network. Vertices with blocked[v] != 0 are removed from the
// digraph. `successors[v]` lists the out-neighbours of v.
class DisjointPathCounter {
 public:
  explicit DisjointPathCounter(const std::vector<std::vector<Vertex>>& successors)
      : successors_(successors) {}

  std::size_t count(std::span<const Vertex> sources,
                    std::span<const Vertex> targets,
                    const std::vector<char>* blocked = nullptr) {
    const std::size_t n = successors_.size();
    // Node layout: 2v = v_in, 2v+1 = v_out, 2n = source, 2n+1 = sink.
    const std::size_t source = 2 * n;
    const std::size_t sink = 2 * n + 1;
    head_.assign(2 * n + 2, kNone);
    edges_.clear();

    auto is_blocked = [&](Vertex v) { return blocked && (*blocked)[v] != 0; };

    for (Vertex v = 0; v < n; ++v) {
      if (is_blocked(v)) continue;
      add_edge(2 * v, 2 * v + 1);
      for (Vertex w : successors_[v])
        if (w != v && !is_blocked(w)) add_edge(2 * v + 1, 2 * w);
    }
    for (Vertex s : sources)
      if (!is_blocked(s)) add_edge(source, 2 * s);
    for (Vertex t : targets)
      if (!is_blocked(t)) add_edge(2 * t + 1, sink);

    std::size_t flow = 0;
    std::vector<std::size_t> parent_edge(2 * n + 2);
    while (augment(source, sink, parent_edge)) ++flow;
    return flow;
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  struct Edge {
    std::size_t to;
    std::size_t next;
    int capacity;
  };

  void add_edge(std::size_t from, std::size_t to) {
    edges_.push_back({to, head_[from], 1});
    head_[from] = edges_.size() - 1;
    edges_.push_back({from, head_[to], 0});
    head_[to] = edges_.size() - 1;
  }

  bool augment(std::size_t source, std::size_t sink,
               std::vector<std::size_t>& parent_edge) {
    std::fill(parent_edge.begin(), parent_edge.end(), kNone);
    std::queue<std::size_t> queue;
    queue.push(source);
    std::vector<char> seen(parent_edge.size(), 0);
    seen[source] = 1;
    while (!queue.empty() && !seen[sink]) {
      std::size_t node = queue.front();
      queue.pop();
      for (std::size_t e = head_[node]; e != kNone; e = edges_[e].next) {
        const Edge& edge = edges_[e];
        if (edge.capacity > 0 && !seen[edge.to]) {
          seen[edge.to] = 1;
          parent_edge[edge.to] = e;
          queue.push(edge.to);
        }
      }
    }
    if (!seen[sink]) return false;
    for (std::size_t node = sink; node != source;) {
      std::size_t e = parent_edge[node];
      edges_[e].capacity -= 1;
      edges_[e ^ 1].capacity += 1;
      node = edges_[e ^ 1].to;
    }
    return true;
  }

  const std::vector<std::vector<Vertex>>& successors_;
  std::vector<std::size_t> head_;
  std::vector<Edge> edges_;
};

}  // namespace heavyarc::detail
