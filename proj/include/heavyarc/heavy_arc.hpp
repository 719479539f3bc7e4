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
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "heavyarc/digraph.hpp"
#include "heavyarc/gammoid.hpp"
#include "heavyarc/oriented.hpp"
#include "heavyarc/types.hpp"

namespace heavyarc {

struct SignedArc {
  Arc arc;
  Sign sign = 1;

  friend auto operator<=>(const SignedArc&, const SignedArc&) = default;
};

/// Arc signs together with a linear order on the arcs. Arcs are stored in
/// ascending order, so the last arc is the heaviest.
class HeavyArcSignature {
 public:
  HeavyArcSignature() = default;

  explicit HeavyArcSignature(std::vector<SignedArc> ascending) : ascending_(std::move(ascending)) {
    for (std::size_t i = 0; i < ascending_.size(); ++i) {
      if (ascending_[i].sign != 1 && ascending_[i].sign != -1)
        throw InputError("arc signs must be +1 or -1");
      if (!rank_.emplace(ascending_[i].arc, i).second)
        throw InputError("arc listed twice in the arc order");
    }
  }

  /// All signs +1, order = order in which the digraph lists its arcs.
  static HeavyArcSignature positive_in_listing_order(const Digraph& d) {
    std::vector<SignedArc> arcs;
    for (const Arc& a : d.arcs()) arcs.push_back({a, 1});
    return HeavyArcSignature(std::move(arcs));
  }

  /// All signs +1, order = lexicographic order on V x V.
  static HeavyArcSignature positive_lexicographic(const Digraph& d) {
    std::vector<Arc> arcs = d.arcs();
    std::sort(arcs.begin(), arcs.end());
    std::vector<SignedArc> signed_arcs;
    for (const Arc& a : arcs) signed_arcs.push_back({a, 1});
    return HeavyArcSignature(std::move(signed_arcs));
  }

  const std::vector<SignedArc>& ascending() const { return ascending_; }
  std::size_t size() const { return ascending_.size(); }

  std::size_t rank(Arc a) const {
    auto it = rank_.find(a);
    if (it == rank_.end()) throw InputError("arc is not covered by the heavy arc signature");
    return it->second;
  }

  Sign sign(Arc a) const { return ascending_[rank(a)].sign; }

  void require_covers(const Digraph& d) const {
    if (ascending_.size() != d.arcs().size())
      throw InputError("heavy arc signature does not cover exactly the arcs of the digraph");
    for (const Arc& a : d.arcs())
      if (!rank_.count(a))
        throw InputError("arc (" + d.name(a.from) + ", " + d.name(a.to) +
                         ") has no sign or position in the arc order");
  }

  friend bool operator==(const HeavyArcSignature& a, const HeavyArcSignature& b) {
    return a.ascending_ == b.ascending_;
  }

 private:
  std::vector<SignedArc> ascending_;
  std::map<Arc, std::size_t> rank_;
};

/// No routing exists for the requested start set.
class DependentSetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<std::size_t> arc_ranks(const Routing& r, const HeavyArcSignature& sig) {
  std::vector<std::size_t> out;
  for (const Arc& a : r.arcs()) out.push_back(sig.rank(a));
  std::sort(out.begin(), out.end());
  return out;
}

// Compares two ascending rank lists by the heaviest element of their
// symmetric difference.
inline std::strong_ordering compare_rank_sets(const std::vector<std::size_t>& q,
                                              const std::vector<std::size_t>& r) {
  auto qi = q.rbegin(), ri = r.rbegin();
  while (qi != q.rend() && ri != r.rend()) {
    if (*qi == *ri) {
      ++qi;
      ++ri;
      continue;
    }
    return *qi > *ri ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  if (qi != q.rend()) return std::strong_ordering::greater;
  if (ri != r.rend()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

}  // namespace detail

/// Routing order: Q < R iff the heaviest arc of the symmetric difference of
/// their arc sets is traversed by R.
inline std::strong_ordering compare_routings(const Routing& q, const Routing& r,
                                             const HeavyArcSignature& sig) {
  return detail::compare_rank_sets(detail::arc_ranks(q, sig), detail::arc_ranks(r, sig));
}

/// The maximal routing X => T in the routing order, found by exhaustive
/// enumeration. Throws DependentSetError if X cannot be routed.
inline Routing max_routing(const Digraph& d, const VertexSet& starts, const VertexSet& targets,
                           const HeavyArcSignature& sig) {
  std::optional<Routing> best;
  std::vector<std::size_t> best_ranks;
  for_each_routing(d, starts, targets, [&](const Routing& r) {
    auto ranks = detail::arc_ranks(r, sig);
    if (!best || detail::compare_rank_sets(ranks, best_ranks) == std::strong_ordering::greater) {
      best = r;
      best_ranks = std::move(ranks);
    }
  });
  if (!best) throw DependentSetError("no routing from " + d.describe(starts) + " to " +
                                     d.describe(targets));
  return *best;
}

/// Parity of the start-to-end index map times the product of the arc signs.
/// `starts` and `ends` are the implicitly ordered lists X and Y.
inline Sign routing_sign(const Routing& r, const VertexSet& starts, const VertexSet& ends,
                         const HeavyArcSignature& sig) {
  if (r.paths.size() != starts.size()) throw InputError("routing does not match the start list");
  std::vector<std::size_t> phi;
  for (Vertex x : starts) {
    const Path* p = r.path_from(x);
    if (!p) throw InputError("routing has no path starting at a listed start vertex");
    auto it = std::lower_bound(ends.begin(), ends.end(), p->back());
    if (it == ends.end() || *it != p->back())
      throw InputError("routing ends outside the target list");
    phi.push_back(static_cast<std::size_t>(it - ends.begin()));
  }
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < phi.size(); ++i)
    for (std::size_t j = i + 1; j < phi.size(); ++j)
      if (phi[i] > phi[j]) ++inversions;
  Sign sign = inversions % 2 ? -1 : 1;
  for (const Arc& a : r.arcs()) sign = static_cast<Sign>(sign * sig.sign(a));
  return sign;
}

/// The maximal routings R_k of C \ {c_k} for every element c_k of a circuit.
inline std::vector<Routing> circuit_max_routings(const RepresentedGammoid& g,
                                                 const HeavyArcSignature& sig,
                                                 const VertexSet& circuit) {
  g.require_in_ground(circuit);
  if (circuit.empty()) throw InputError("the empty set is not a circuit");
  if (has_routing(g.digraph, circuit, g.targets))
    throw InputError("set " + g.digraph.describe(circuit) + " is independent, not a circuit");
  std::vector<Routing> out;
  for (Vertex c : circuit) {
    try {
      out.push_back(max_routing(g.digraph, without(circuit, c), g.targets, sig));
    } catch (const DependentSetError&) {
      throw InputError("set " + g.digraph.describe(circuit) +
                       " is not a circuit: a proper subset is dependent");
    }
  }
  return out;
}

/// Heavy arc signature of a circuit anchored at circuit[anchor] (0-based):
/// -sgn(R_i) at the anchor and (-1)^(i-j+1) sgn(R_j) at every other element.
inline SignedSubset circuit_signature(const RepresentedGammoid& g, const HeavyArcSignature& sig,
                                      const VertexSet& circuit, std::size_t anchor) {
  if (anchor >= circuit.size()) throw InputError("anchor index out of range");
  sig.require_covers(g.digraph);
  const auto routings = circuit_max_routings(g, sig, circuit);
  SignedSubset out(g.ground);
  for (std::size_t j = 0; j < circuit.size(); ++j) {
    Sign s = routing_sign(routings[j], without(circuit, circuit[j]), g.targets, sig);
    if (j == anchor) {
      out.set(circuit[j], static_cast<Sign>(-s));
    } else {
      const std::size_t distance = anchor > j ? anchor - j : j - anchor;
      out.set(circuit[j], static_cast<Sign>(distance % 2 ? s : -s));
    }
  }
  return out;
}

/// Heavy arc orientation of a gammoid represented by an acyclic digraph.
inline Orientation orient_acyclic(const RepresentedGammoid& g, const HeavyArcSignature& sig) {
  if (!is_acyclic(g.digraph))
    throw InputError("orient_acyclic requires an acyclic digraph; use orient for cyclic ones");
  sig.require_covers(g.digraph);
  Orientation out(g.ground);
  for (const VertexSet& c : circuits(g).members) out.insert_pair(circuit_signature(g, sig, c, 0));
  return out;
}

/// Extends a signature across one lifting: the removed arc (c1, c2) is
/// dropped and (c1, t), (x, c2), (x, t) are appended as the heaviest arcs,
/// all positive.
inline HeavyArcSignature lift_signature(const HeavyArcSignature& sig, const CycleWalk& cycle,
                                        Vertex x, Vertex t) {
  const Arc removed{cycle.at(0), cycle.at(1)};
  std::vector<SignedArc> arcs;
  for (const SignedArc& a : sig.ascending())
    if (a.arc != removed) arcs.push_back(a);
  arcs.push_back({{cycle[0], t}, 1});
  arcs.push_back({{x, cycle[1]}, 1});
  arcs.push_back({{x, t}, 1});
  return HeavyArcSignature(std::move(arcs));
}

/// A complete lifting of a represented gammoid together with the acyclic
/// representation Gamma(D', T + {t_i}, E + {x_i}) and its extended signature.
struct LiftedInstance {
  LiftingTrace trace;
  RepresentedGammoid gammoid;
  HeavyArcSignature signature;
};

inline LiftedInstance lift_instance(const RepresentedGammoid& g, const HeavyArcSignature& sig) {
  sig.require_covers(g.digraph);
  LiftingTrace trace = complete_lifting(g.digraph);
  HeavyArcSignature lifted_sig = sig;
  for (const auto& step : trace.steps)
    lifted_sig = lift_signature(lifted_sig, step.cycle, step.x, step.t);
  RepresentedGammoid lifted(trace.result(), set_union(g.targets, trace.lifted_targets()),
                            set_union(g.ground, trace.lifted_starts()));
  return {std::move(trace), std::move(lifted), std::move(lifted_sig)};
}

/// Heavy arc orientation of any represented gammoid. Cyclic digraphs are
/// completely lifted, the lifted gammoid is oriented, and the result is
/// contracted back to the original ground set.
inline Orientation orient(const RepresentedGammoid& g, const HeavyArcSignature& sig) {
  sig.require_covers(g.digraph);
  if (is_acyclic(g.digraph)) return orient_acyclic(g, sig);
  LiftedInstance lifted = lift_instance(g, sig);
  return contract_orientation(orient_acyclic(lifted.gammoid, lifted.signature), g.ground);
}

}  // namespace heavyarc
