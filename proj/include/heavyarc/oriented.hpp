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
#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heavyarc/gammoid.hpp"
#include "heavyarc/types.hpp"

namespace heavyarc {

/// A map from an ordered ground set to {-1, 0, +1}.
class SignedSubset {
 public:
  SignedSubset() = default;

  explicit SignedSubset(VertexSet ground)
      : ground_(std::move(ground)), signs_(ground_.size(), 0) {}

  SignedSubset(VertexSet ground, std::vector<Sign> signs)
      : ground_(std::move(ground)), signs_(std::move(signs)) {
    if (signs_.size() != ground_.size())
      throw InputError("sign vector does not match the ground set");
    for (Sign s : signs_)
      if (s < -1 || s > 1) throw InputError("signs must lie in {-1, 0, +1}");
  }

  const VertexSet& ground() const { return ground_; }
  const std::vector<Sign>& signs() const { return signs_; }

  Sign operator[](Vertex v) const { return signs_[position(v)]; }
  void set(Vertex v, Sign s) {
    if (s < -1 || s > 1) throw InputError("signs must lie in {-1, 0, +1}");
    signs_[position(v)] = s;
  }

  VertexSet positive() const { return collect([](Sign s) { return s > 0; }); }
  VertexSet negative() const { return collect([](Sign s) { return s < 0; }); }
  VertexSet support() const { return collect([](Sign s) { return s != 0; }); }
  VertexSet zeros() const { return collect([](Sign s) { return s == 0; }); }

  bool empty() const {
    return std::all_of(signs_.begin(), signs_.end(), [](Sign s) { return s == 0; });
  }

  SignedSubset operator-() const {
    SignedSubset out = *this;
    for (Sign& s : out.signs_) s = static_cast<Sign>(-s);
    return out;
  }

  friend auto operator<=>(const SignedSubset&, const SignedSubset&) = default;

 private:
  std::size_t position(Vertex v) const {
    auto it = std::lower_bound(ground_.begin(), ground_.end(), v);
    if (it == ground_.end() || *it != v) throw InputError("element outside the ground set");
    return static_cast<std::size_t>(it - ground_.begin());
  }

  template <class Pred>
  VertexSet collect(Pred pred) const {
    VertexSet out;
    for (std::size_t i = 0; i < ground_.size(); ++i)
      if (pred(signs_[i])) out.push_back(ground_[i]);
    return out;
  }

  VertexSet ground_;
  std::vector<Sign> signs_;
};

inline SignedSubset negate(const SignedSubset& x) { return -x; }

/// A family of signed subsets on a common ground set, stored sorted and
/// without duplicates. Orientations produced by this library are closed under
/// negation and have pairwise incomparable supports.
class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(VertexSet ground) : ground_(std::move(ground)) {}

  Orientation(VertexSet ground, std::vector<SignedSubset> members)
      : ground_(std::move(ground)) {
    for (auto& m : members) insert(std::move(m));
  }

  /// Builds the negation closure of `representatives`.
  static Orientation closure(VertexSet ground, const std::vector<SignedSubset>& representatives) {
    Orientation out(std::move(ground));
    for (const auto& r : representatives) out.insert_pair(r);
    return out;
  }

  void insert(SignedSubset x) {
    if (x.ground() != ground_) throw InputError("signed subset has a different ground set");
    auto it = std::lower_bound(members_.begin(), members_.end(), x);
    if (it == members_.end() || *it != x) members_.insert(it, std::move(x));
  }

  void insert_pair(const SignedSubset& x) {
    insert(x);
    insert(-x);
  }

  const VertexSet& ground() const { return ground_; }
  const std::vector<SignedSubset>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(const SignedSubset& x) const {
    return std::binary_search(members_.begin(), members_.end(), x);
  }

  /// One member per +-pair: the one whose first non-zero sign is positive.
  std::vector<SignedSubset> representatives() const {
    std::vector<SignedSubset> out;
    for (const auto& m : members_) {
      auto first = std::find_if(m.signs().begin(), m.signs().end(), [](Sign s) { return s != 0; });
      if (first == m.signs().end() || *first > 0) out.push_back(m);
    }
    return out;
  }

  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  VertexSet ground_;
  std::vector<SignedSubset> members_;
};

enum class Axiom {
  empty_support,       // (C0)
  negation_closure,    // (C1)
  incomparability,     // (C2)
  weak_elimination,    // (C3)
  strong_elimination,
};

inline std::string axiom_name(Axiom a) {
  switch (a) {
    case Axiom::empty_support: return "empty support";
    case Axiom::negation_closure: return "negation closure";
    case Axiom::incomparability: return "support incomparability";
    case Axiom::weak_elimination: return "weak elimination";
    case Axiom::strong_elimination: return "strong elimination";
  }
  return "unknown";
}

/// Witness of one axiom violation: X (and Y) are the offending members, e is
/// the eliminated element and f the element that no admissible Z retains.
struct AxiomViolation {
  Axiom axiom;
  SignedSubset x;
  std::optional<SignedSubset> y;
  std::optional<Vertex> e;
  std::optional<Vertex> f;

  friend auto operator<=>(const AxiomViolation&, const AxiomViolation&) = default;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;

  bool ok() const { return violations.empty(); }
  bool violates(Axiom a) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const AxiomViolation& v) { return v.axiom == a; });
  }
};

namespace detail {

struct SignMasks {
  GroundMask pos = 0;
  GroundMask neg = 0;
  GroundMask support() const { return pos | neg; }
};

inline SignMasks sign_masks(const SignedSubset& x) {
  SignMasks m;
  for (std::size_t i = 0; i < x.signs().size(); ++i) {
    if (x.signs()[i] > 0) m.pos |= GroundMask{1} << i;
    if (x.signs()[i] < 0) m.neg |= GroundMask{1} << i;
  }
  return m;
}

}  // namespace detail

/// Checks the signed circuit axioms (C0)-(C3) and strong circuit elimination
/// on `family`. Strong elimination is tested for every X != -Y, every
/// e in X+ & Y-, and every f in the union of the supports outside the
/// separation set of X and Y. The report is sorted.
inline AxiomReport check_circuit_axioms(const std::vector<SignedSubset>& family) {
  using detail::GroundMask;
  AxiomReport report;
  if (family.empty()) return report;
  const VertexSet& ground = family.front().ground();
  for (const auto& x : family)
    if (x.ground() != ground) throw InputError("signed subsets have different ground sets");
  detail::require_mask_capacity(ground.size());

  std::vector<SignedSubset> members = family;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  std::vector<detail::SignMasks> masks;
  for (const auto& m : members) masks.push_back(detail::sign_masks(m));

  for (std::size_t i = 0; i < members.size(); ++i) {
    if (masks[i].support() == 0)
      report.violations.push_back({Axiom::empty_support, members[i], {}, {}, {}});
    if (!std::binary_search(members.begin(), members.end(), -members[i]))
      report.violations.push_back({Axiom::negation_closure, members[i], {}, {}, {}});
  }

  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (i == j) continue;
      const auto& mx = masks[i];
      const auto& my = masks[j];
      const GroundMask sx = mx.support(), sy = my.support();
      const bool opposite = mx.pos == my.neg && mx.neg == my.pos;

      if (sx != 0 && (sx & sy) == sx && !opposite)
        report.violations.push_back({Axiom::incomparability, members[i], members[j], {}, {}});

      if (opposite) continue;
      const GroundMask separation = (mx.pos & my.neg) | (mx.neg & my.pos);
      for (GroundMask es = mx.pos & my.neg; es; es &= es - 1) {
        const GroundMask ebit = es & -es;
        const Vertex e = ground[std::countr_zero(ebit)];
        const GroundMask allowed_pos = (mx.pos | my.pos) & ~ebit;
        const GroundMask allowed_neg = (mx.neg | my.neg) & ~ebit;

        GroundMask reachable = 0;  // union of supports of admissible Z
        bool any = false;
        for (const auto& mz : masks) {
          if (mz.support() == 0) continue;
          if ((mz.pos & ~allowed_pos) == 0 && (mz.neg & ~allowed_neg) == 0) {
            any = true;
            reachable |= mz.support();
          }
        }
        if (!any)
          report.violations.push_back({Axiom::weak_elimination, members[i], members[j], e, {}});

        const GroundMask retain = (sx | sy) & ~separation;
        for (GroundMask fs = retain & ~reachable; fs; fs &= fs - 1) {
          const Vertex f = ground[std::countr_zero(fs)];
          report.violations.push_back(
              {Axiom::strong_elimination, members[i], members[j], e, f});
        }
      }
    }
  }
  std::sort(report.violations.begin(), report.violations.end());
  return report;
}

inline AxiomReport check_circuit_axioms(const Orientation& o) {
  return check_circuit_axioms(o.members());
}

/// Circuit family of the underlying matroid (supports, deduplicated over +-).
inline CircuitFamily underlying_matroid(const Orientation& o) {
  CircuitFamily out{o.ground(), {}};
  for (const auto& m : o.members()) out.members.push_back(m.support());
  out.normalize();
  return out;
}

/// Contraction to `subset`: signed circuits are restricted to `subset`, empty
/// restrictions are dropped, and only the members of minimal support remain.
inline Orientation contract_orientation(const Orientation& o, const VertexSet& subset) {
  if (!is_subset(subset, o.ground()))
    throw InputError("contraction target must be a subset of the ground set");
  std::vector<SignedSubset> restricted;
  for (const auto& m : o.members()) {
    SignedSubset r(subset);
    for (Vertex v : subset) r.set(v, m[v]);
    if (!r.empty()) restricted.push_back(std::move(r));
  }
  detail::require_mask_capacity(subset.size());
  std::vector<detail::GroundMask> supports;
  for (const auto& r : restricted) supports.push_back(detail::sign_masks(r).support());
  auto minimal = detail::minimal_nonempty(supports);
  Orientation out(subset);
  for (std::size_t i = 0; i < restricted.size(); ++i)
    if (std::find(minimal.begin(), minimal.end(), supports[i]) != minimal.end())
      out.insert(restricted[i]);
  return out;
}

}  // namespace heavyarc
