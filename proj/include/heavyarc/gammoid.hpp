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
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "heavyarc/digraph.hpp"
#include "heavyarc/types.hpp"

namespace heavyarc {

/// The gammoid on `ground` whose independent sets are the subsets that can be
/// routed into `targets` in `digraph`.
struct RepresentedGammoid {
  Digraph digraph;
  VertexSet targets;
  VertexSet ground;

  RepresentedGammoid() = default;
  RepresentedGammoid(Digraph d, VertexSet t, VertexSet e)
      : digraph(std::move(d)), targets(std::move(t)), ground(std::move(e)) {
    digraph.require_vertices(targets, "target set");
    digraph.require_vertices(ground, "ground set");
  }

  void require_in_ground(const VertexSet& x) const {
    digraph.require_vertices(x, "subset");
    if (!is_subset(x, ground)) throw InputError("subset is not contained in the ground set");
  }

  friend bool operator==(const RepresentedGammoid&, const RepresentedGammoid&) = default;
};

/// Circuits of a matroid on an ordered ground set. Members are sorted by size,
/// then lexicographically.
struct CircuitFamily {
  VertexSet ground;
  std::vector<VertexSet> members;

  void normalize() {
    std::sort(members.begin(), members.end(), [](const VertexSet& a, const VertexSet& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    members.erase(std::unique(members.begin(), members.end()), members.end());
  }

  bool contains(const VertexSet& c) const {
    return std::find(members.begin(), members.end(), c) != members.end();
  }

  friend bool operator==(const CircuitFamily&, const CircuitFamily&) = default;
};

inline bool is_independent(const RepresentedGammoid& g, const VertexSet& x) {
  g.require_in_ground(x);
  return has_routing(g.digraph, x, g.targets);
}

inline std::size_t rank(const RepresentedGammoid& g, const VertexSet& x) {
  g.require_in_ground(x);
  return max_routable(g.digraph, x, g.targets);
}

namespace detail {

using GroundMask = std::uint64_t;

inline void require_mask_capacity(std::size_t ground_size) {
  if (ground_size >= 64)
    throw InputError("circuit enumeration supports ground sets of at most 63 elements");
}

inline VertexSet mask_to_set(const VertexSet& ground, GroundMask mask) {
  VertexSet out;
  for (std::size_t i = 0; i < ground.size(); ++i)
    if (mask >> i & 1) out.push_back(ground[i]);
  return out;
}

inline GroundMask set_to_mask(const VertexSet& ground, const VertexSet& set) {
  GroundMask mask = 0;
  for (Vertex v : set) {
    auto it = std::lower_bound(ground.begin(), ground.end(), v);
    if (it == ground.end() || *it != v) throw InputError("element outside the ground set");
    mask |= GroundMask{1} << (it - ground.begin());
  }
  return mask;
}

/// Keeps the inclusion-minimal, non-empty masks.
inline std::vector<GroundMask> minimal_nonempty(std::vector<GroundMask> masks) {
  std::sort(masks.begin(), masks.end(), [](GroundMask a, GroundMask b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<GroundMask> kept;
  for (GroundMask m : masks) {
    if (m == 0) continue;
    bool dominated = std::any_of(kept.begin(), kept.end(),
                                 [&](GroundMask k) { return (m & k) == k; });
    if (!dominated) kept.push_back(m);
  }
  return kept;
}

}  // namespace detail

/// Inclusion-minimal dependent subsets of the ground set. Candidates are
/// generated level by level from the independent sets of the previous size,
/// so every generated dependent set whose proper subsets are all independent
/// is a circuit.
inline CircuitFamily circuits(const RepresentedGammoid& g) {
  using detail::GroundMask;
  const VertexSet& ground = g.ground;
  detail::require_mask_capacity(ground.size());

  detail::DisjointPathCounter counter(g.digraph.adjacency());
  std::vector<Vertex> scratch;
  auto independent = [&](GroundMask mask) {
    scratch.clear();
    for (std::size_t i = 0; i < ground.size(); ++i)
      if (mask >> i & 1) scratch.push_back(ground[i]);
    return counter.count(scratch, g.targets) == scratch.size();
  };

  std::vector<GroundMask> found;
  std::vector<GroundMask> level{0};
  while (!level.empty()) {
    std::vector<GroundMask> next;
    for (GroundMask base : level) {
      std::size_t first = base == 0 ? 0 : 64 - std::countl_zero(base);
      for (std::size_t i = first; i < ground.size(); ++i) {
        GroundMask candidate = base | GroundMask{1} << i;
        // All one-smaller subsets must be independent, i.e. present in `level`;
        // otherwise the candidate contains a circuit already found.
        bool all_subsets_independent = true;
        for (GroundMask rest = candidate; rest; rest &= rest - 1) {
          GroundMask sub = candidate & ~(rest & -rest);
          if (!std::binary_search(level.begin(), level.end(), sub)) {
            all_subsets_independent = false;
            break;
          }
        }
        if (!all_subsets_independent) continue;
        if (independent(candidate))
          next.push_back(candidate);
        else
          found.push_back(candidate);
      }
    }
    std::sort(next.begin(), next.end());
    level = std::move(next);
  }

  CircuitFamily family{ground, {}};
  for (GroundMask c : found) family.members.push_back(detail::mask_to_set(ground, c));
  family.normalize();
  return family;
}

/// Circuits of the contraction of the matroid to `subset`: the minimal
/// non-empty sets among C \ (ground \ subset) for circuits C.
inline CircuitFamily contract_circuits(const CircuitFamily& family, const VertexSet& subset) {
  if (!is_subset(subset, family.ground))
    throw InputError("contraction target must be a subset of the ground set");
  CircuitFamily out{subset, {}};
  detail::require_mask_capacity(subset.size());
  std::vector<detail::GroundMask> masks;
  for (const VertexSet& c : family.members) {
    VertexSet kept;
    std::set_intersection(c.begin(), c.end(), subset.begin(), subset.end(),
                          std::back_inserter(kept));
    masks.push_back(detail::set_to_mask(subset, kept));
  }
  for (auto m : detail::minimal_nonempty(std::move(masks)))
    out.members.push_back(detail::mask_to_set(subset, m));
  out.normalize();
  return out;
}

inline bool matroids_equal(const CircuitFamily& a, const CircuitFamily& b) {
  if (a.ground != b.ground) throw InputError("circuit families have different ground sets");
  CircuitFamily x = a, y = b;
  x.normalize();
  y.normalize();
  return x.members == y.members;
}

/// Re-represents the gammoid with exactly rank(E) targets: fresh targets are
/// appended and every old target gets an arc to each of them.
inline RepresentedGammoid normalize_targets(const RepresentedGammoid& g) {
  const std::size_t r = max_routable(g.digraph, g.ground, g.targets);
  std::vector<std::string> names = g.digraph.names();
  std::vector<Arc> arcs = g.digraph.arcs();
  VertexSet fresh;
  for (std::size_t i = 1; i <= r; ++i) {
    std::string name = "r" + std::to_string(i);
    while (std::find(names.begin(), names.end(), name) != names.end()) name += '\'';
    fresh.push_back(static_cast<Vertex>(names.size()));
    names.push_back(name);
  }
  for (Vertex t : g.targets)
    for (Vertex n : fresh) arcs.push_back({t, n});
  return RepresentedGammoid(Digraph(std::move(names), std::move(arcs)), fresh, g.ground);
}

}  // namespace heavyarc
