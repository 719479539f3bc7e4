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

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "heavyarc/digraph.hpp"
#include "heavyarc/gammoid.hpp"
#include "heavyarc/heavy_arc.hpp"
#include "heavyarc/oriented.hpp"
#include "heavyarc/types.hpp"

namespace heavyarc {

using BigInt = mpz_class;

/// Weights grow doubly exponentially in the number of arcs; beyond this the
/// oracle refuses to run.
inline constexpr std::size_t kOracleMaxArcs = 24;

/// Integer arc weights whose signs follow a heavy arc signature and whose
/// magnitudes dominate every product of strictly lighter weights.
class HeavyWeighting {
 public:
  HeavyWeighting() = default;
  explicit HeavyWeighting(std::vector<std::pair<Arc, BigInt>> ascending)
      : ascending_(std::move(ascending)) {
    for (std::size_t i = 0; i < ascending_.size(); ++i)
      if (!index_.emplace(ascending_[i].first, i).second)
        throw InputError("arc weighted twice");
  }

  const std::vector<std::pair<Arc, BigInt>>& ascending() const { return ascending_; }

  const BigInt& weight(Arc a) const {
    auto it = index_.find(a);
    if (it == index_.end()) throw InputError("arc has no weight");
    return ascending_[it->second].second;
  }

 private:
  std::vector<std::pair<Arc, BigInt>> ascending_;
  std::map<Arc, std::size_t> index_;
};

/// |w(a_k)| = 1 + prod_{i<k} (1 + |w(a_i)|), sign(w(a_k)) = sigma(a_k).
/// The product equals the sum over all subsets of lighter arcs of the
/// products of their magnitudes, so each weight exceeds that sum by one.
inline HeavyWeighting heavy_weighting(const HeavyArcSignature& sig) {
  std::vector<std::pair<Arc, BigInt>> weights;
  BigInt lighter_subset_sum = 1;
  for (const SignedArc& a : sig.ascending()) {
    BigInt magnitude = lighter_subset_sum + 1;
    lighter_subset_sum *= magnitude + 1;
    weights.emplace_back(a.arc, a.sign < 0 ? BigInt(-magnitude) : magnitude);
  }
  return HeavyWeighting(std::move(weights));
}

/// Checks |w(a)| >= 1, sign(w(a)) = sigma(a), and the strict subset-sum
/// inequality for every arc by enumerating all subsets of lighter arcs.
inline bool verify_heavy_weighting(const HeavyWeighting& w, const HeavyArcSignature& sig) {
  if (w.ascending().size() != sig.size()) return false;
  if (sig.size() > kOracleMaxArcs) throw InputError("too many arcs for brute-force verification");
  // subset_products holds prod_{x in L} |w(x)| for every subset L of the
  // arcs seen so far.
  std::vector<BigInt> subset_products{BigInt(1)};
  for (const SignedArc& a : sig.ascending()) {
    BigInt value;
    try {
      value = w.weight(a.arc);
    } catch (const InputError&) {
      return false;
    }
    BigInt magnitude = abs(value);
    if (magnitude < 1) return false;
    if (sgn(value) != a.sign) return false;
    BigInt sum = 0;
    for (const BigInt& p : subset_products) sum += p;
    if (!(sum < magnitude)) return false;
    const std::size_t count = subset_products.size();
    for (std::size_t i = 0; i < count; ++i) subset_products.push_back(subset_products[i] * magnitude);
  }
  return true;
}

/// Dense big-integer matrix, row-major.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<BigInt> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  IntMatrix(std::size_t r, std::size_t c, std::vector<BigInt> values)
      : rows(r), cols(c), data(std::move(values)) {
    if (data.size() != r * c) throw InputError("matrix data has the wrong size");
  }

  BigInt& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const BigInt& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Exact determinant by fraction-free (Bareiss) elimination.
inline BigInt determinant(IntMatrix m) {
  if (m.rows != m.cols) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows;
  if (n == 0) return 1;
  BigInt previous_pivot = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m.at(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt value = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), previous_pivot.get_mpz_t());
        m.at(i, j) = std::move(value);
      }
      m.at(i, k) = 0;
    }
    previous_pivot = m.at(k, k);
  }
  BigInt det = m.at(n - 1, n - 1);
  return sign < 0 ? BigInt(-det) : det;
}

inline Sign det_sign(const IntMatrix& m) { return static_cast<Sign>(sgn(determinant(m))); }

/// Path matrix of an acyclic digraph: rows indexed by `row_set`, columns by
/// `col_set`, entry (u, v) = sum over all u-v paths of the product of their
/// arc weights.
struct PathMatrix {
  VertexSet row_set;
  VertexSet col_set;
  IntMatrix values;

  const BigInt& at(Vertex u, Vertex v) const {
    return values.at(index_of(row_set, u), index_of(col_set, v));
  }

  /// The minor on the given (implicitly ordered) rows and columns.
  IntMatrix minor(const std::vector<Vertex>& rows, const VertexSet& cols) const {
    IntMatrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) out.at(i, j) = at(rows[i], cols[j]);
    return out;
  }

 private:
  static std::size_t index_of(const VertexSet& set, Vertex v) {
    auto it = std::lower_bound(set.begin(), set.end(), v);
    if (it == set.end() || *it != v) throw InputError("vertex is not a matrix index");
    return static_cast<std::size_t>(it - set.begin());
  }
};

/// Computes the path sums by dynamic programming over a topological order:
/// mu(u, v) = [u == v] + sum over arcs (u, x) of w(u, x) * mu(x, v).
inline PathMatrix path_matrix(const Digraph& d, const HeavyWeighting& w, const VertexSet& rows,
                              const VertexSet& cols) {
  d.require_vertices(rows, "row set");
  d.require_vertices(cols, "column set");
  if (!is_acyclic(d)) throw InputError("path matrix requires an acyclic digraph");
  const std::size_t n = d.vertex_count();
  // to_cols[v][j] = path sum from v to cols[j].
  std::vector<std::vector<BigInt>> to_cols(n, std::vector<BigInt>(cols.size(), 0));
  auto order = topological_order(d);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex u = *it;
    auto& row = to_cols[u];
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (cols[j] == u) row[j] = 1;
    for (Vertex x : d.successors(u)) {
      const BigInt& weight = w.weight({u, x});
      for (std::size_t j = 0; j < cols.size(); ++j) row[j] += weight * to_cols[x][j];
    }
  }
  PathMatrix out{rows, cols, IntMatrix(rows.size(), cols.size())};
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out.values.at(i, j) = to_cols[rows[i]][j];
  return out;
}

/// The base minor mu|(C \ {c}) x T0 is singular.
class SingularMinorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Signed circuit from Cramer's rule: -1 at c and, at every other e in C, the
/// sign of det(nu_e) / det(mu|(C \ {c}) x T0), where nu_e is the base minor
/// with row e replaced by row c.
inline SignedSubset cramer_circuit_orientation(const PathMatrix& mu, const VertexSet& circuit,
                                               Vertex c, const VertexSet& t0) {
  if (!contains(circuit, c)) throw InputError("anchor element is not in the circuit");
  if (!is_subset(circuit, mu.row_set) || !is_subset(t0, mu.col_set))
    throw InputError("circuit or target subset outside the path matrix");
  if (t0.size() + 1 != circuit.size())
    throw InputError("target subset must have one element fewer than the circuit");
  const VertexSet rest = without(circuit, c);
  const IntMatrix base = mu.minor(rest, t0);
  const Sign base_sign = det_sign(base);
  if (base_sign == 0)
    throw SingularMinorError(
        "base minor is singular; choose T0 as the common end vertices of the maximal routings");
  SignedSubset out(mu.row_set);
  out.set(c, -1);
  for (std::size_t r = 0; r < rest.size(); ++r) {
    IntMatrix nu = base;
    for (std::size_t j = 0; j < t0.size(); ++j) nu.at(r, j) = mu.at(c, t0[j]);
    out.set(rest[r], static_cast<Sign>(det_sign(nu) * base_sign));
  }
  return out;
}

/// Orientation of the matrix M(mu) for a heavy arc weighting of an acyclic
/// digraph, one Cramer circuit per circuit of the gammoid.
inline Orientation oracle_orientation(const RepresentedGammoid& g, const HeavyArcSignature& sig) {
  if (!is_acyclic(g.digraph)) throw InputError("the linear-algebra oracle requires an acyclic digraph");
  sig.require_covers(g.digraph);
  if (sig.size() > kOracleMaxArcs)
    throw InputError("oracle refuses digraphs with more than " + std::to_string(kOracleMaxArcs) +
                     " arcs (heavy weights would be impractically large)");
  const HeavyWeighting w = heavy_weighting(sig);
  const PathMatrix mu = path_matrix(g.digraph, w, g.ground, g.targets);
  Orientation out(g.ground);
  for (const VertexSet& c : circuits(g).members) {
    const Vertex anchor = c.front();
    const VertexSet t0 = max_routing(g.digraph, without(c, anchor), g.targets, sig).ends();
    out.insert_pair(cramer_circuit_orientation(mu, c, anchor, t0));
  }
  return out;
}

inline bool compare_orientations(const Orientation& a, const Orientation& b) {
  if (a.ground() != b.ground()) throw InputError("orientations have different ground sets");
  return a.members() == b.members();
}

}  // namespace heavyarc
