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

// Brute-force reference computations used only by the tests. Nothing here
// calls into the library's enumeration, flow, or elimination code.

#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "heavyarc/digraph.hpp"

namespace heavyarc::testing {

using VertexList = std::vector<Vertex>;

/// All simple paths from u to v, found by breadth-first extension of partial
/// paths.
inline std::vector<VertexList> brute_paths(const Digraph& d, Vertex u, Vertex v) {
  std::vector<VertexList> out;
  std::vector<VertexList> frontier{{u}};
  while (!frontier.empty()) {
    std::vector<VertexList> next;
    for (const auto& p : frontier) {
      if (p.back() == v) out.push_back(p);
      for (const Arc& a : d.arcs()) {
        if (a.from != p.back()) continue;
        if (std::find(p.begin(), p.end(), a.to) != p.end()) continue;
        auto q = p;
        q.push_back(a.to);
        next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// All routings X => T as sorted lists of paths, by trying every combination
/// of one path per start vertex and keeping the vertex-disjoint ones.
inline std::vector<std::vector<VertexList>> brute_routings(const Digraph& d, const VertexList& starts,
                                                           const VertexList& targets) {
  std::vector<std::vector<VertexList>> choices;
  for (Vertex x : starts) {
    std::vector<VertexList> options;
    for (Vertex t : targets) {
      auto ps = brute_paths(d, x, t);
      options.insert(options.end(), ps.begin(), ps.end());
    }
    choices.push_back(std::move(options));
  }
  std::vector<std::vector<VertexList>> out;
  std::vector<VertexList> current;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == choices.size()) {
      std::set<Vertex> seen;
      std::size_t total = 0;
      for (const auto& p : current) {
        seen.insert(p.begin(), p.end());
        total += p.size();
      }
      if (seen.size() == total) {
        auto sorted = current;
        std::sort(sorted.begin(), sorted.end());
        out.push_back(sorted);
      }
      return;
    }
    for (const auto& p : choices[i]) {
      current.push_back(p);
      rec(i + 1);
      current.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

inline VertexList subset_of(const VertexList& ground, std::uint32_t mask) {
  VertexList out;
  for (std::size_t i = 0; i < ground.size(); ++i)
    if (mask >> i & 1) out.push_back(ground[i]);
  return out;
}

inline bool brute_independent(const Digraph& d, const VertexList& x, const VertexList& targets) {
  return !brute_routings(d, x, targets).empty();
}

/// Rank table over all subsets of `ground` (indexed by bit mask).
inline std::vector<std::size_t> brute_rank_table(const Digraph& d, const VertexList& ground,
                                                 const VertexList& targets) {
  const std::uint32_t n = static_cast<std::uint32_t>(ground.size());
  std::vector<char> indep(1u << n, 0);
  for (std::uint32_t m = 0; m < (1u << n); ++m)
    indep[m] = brute_independent(d, subset_of(ground, m), targets);
  std::vector<std::size_t> rank(1u << n, 0);
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    for (std::uint32_t s = m;; s = (s - 1) & m) {
      if (indep[s]) rank[m] = std::max<std::size_t>(rank[m], __builtin_popcount(s));
      if (s == 0) break;
    }
  }
  return rank;
}

/// Minimal dependent subsets, as sorted vertex lists, sorted by size then
/// lexicographically.
inline std::vector<VertexList> brute_circuits(const Digraph& d, const VertexList& ground,
                                              const VertexList& targets) {
  const std::uint32_t n = static_cast<std::uint32_t>(ground.size());
  std::vector<char> indep(1u << n, 0);
  for (std::uint32_t m = 0; m < (1u << n); ++m)
    indep[m] = brute_independent(d, subset_of(ground, m), targets);
  std::vector<VertexList> out;
  for (std::uint32_t m = 1; m < (1u << n); ++m) {
    if (indep[m]) continue;
    bool minimal = true;
    for (std::uint32_t i = 0; i < n; ++i)
      if ((m >> i & 1) && !indep[m & ~(1u << i)]) minimal = false;
    if (minimal) out.push_back(subset_of(ground, m));
  }
  std::sort(out.begin(), out.end(), [](const VertexList& a, const VertexList& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

/// Circuits of the contraction to `keep` via the contracted rank function
/// rk'(Y) = rk(Y + Z) - rk(Z), Z = ground - keep. `rank` is indexed by masks
/// over `ground`; the result is over `keep`.
inline std::vector<VertexList> brute_contracted_circuits(const std::vector<std::size_t>& rank,
                                                         const VertexList& ground,
                                                         const VertexList& keep) {
  std::uint32_t zmask = 0, kmask = 0;
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if (std::binary_search(keep.begin(), keep.end(), ground[i]))
      kmask |= 1u << i;
    else
      zmask |= 1u << i;
  }
  auto contracted_rank = [&](std::uint32_t y) { return rank[y | zmask] - rank[zmask]; };
  auto dependent = [&](std::uint32_t y) {
    return contracted_rank(y) < static_cast<std::size_t>(__builtin_popcount(y));
  };
  std::vector<VertexList> out;
  for (std::uint32_t y = kmask;; y = (y - 1) & kmask) {
    if (y != 0 && dependent(y)) {
      bool minimal = true;
      for (std::size_t i = 0; i < ground.size(); ++i)
        if ((y >> i & 1) && dependent(y & ~(1u << i))) minimal = false;
      if (minimal) out.push_back(subset_of(ground, y));
    }
    if (y == 0) break;
  }
  std::sort(out.begin(), out.end(), [](const VertexList& a, const VertexList& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

/// Every cycle walk, rotated to start at its smallest vertex. Sorted.
inline std::vector<VertexList> brute_cycles(const Digraph& d) {
  std::vector<VertexList> out;
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    // paths v -> u through vertices >= v, closed by an arc (u, v)
    for (Vertex u = v; u < d.vertex_count(); ++u) {
      if (!d.has_arc({u, v})) continue;
      for (auto p : brute_paths(d, v, u)) {
        if (std::any_of(p.begin(), p.end(), [&](Vertex w) { return w < v; })) continue;
        p.push_back(v);
        out.push_back(std::move(p));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Determinant by Laplace expansion along the first row.
inline mpz_class cofactor_determinant(const std::vector<std::vector<mpz_class>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  mpz_class det = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<mpz_class>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<mpz_class> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    mpz_class term = m[0][col] * cofactor_determinant(minor);
    det += col % 2 ? mpz_class(-term) : term;
  }
  return det;
}

}  // namespace heavyarc::testing
