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
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "heavyarc/detail/disjoint_paths.hpp"
#include "heavyarc/types.hpp"

namespace heavyarc {

/// Finite simple digraph with loops permitted. Vertices are identified by
/// their index; the listing order of the names is the implicit vertex order.
/// Arcs keep the order in which they were supplied, which the instance file
/// format uses to define the arc order of a heavy arc signature.
class Digraph {
 public:
  Digraph() = default;

  explicit Digraph(std::vector<std::string> names, std::vector<Arc> arcs = {})
      : names_(std::move(names)), arcs_(std::move(arcs)) {
    for (Vertex v = 0; v < names_.size(); ++v) {
      if (names_[v].empty()) throw InputError("vertex names must be non-empty");
      if (!index_.emplace(names_[v], v).second)
        throw InputError("duplicate vertex '" + names_[v] + "'");
    }
    successors_.assign(names_.size(), {});
    for (const Arc& a : arcs_) {
      if (a.from >= names_.size() || a.to >= names_.size())
        throw InputError("arc endpoint out of range");
      successors_[a.from].push_back(a.to);
    }
    for (auto& succ : successors_) {
      std::sort(succ.begin(), succ.end());
      if (std::adjacent_find(succ.begin(), succ.end()) != succ.end())
        throw InputError("duplicate arc");
    }
  }

  std::size_t vertex_count() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Vertex v) const { return names_.at(v); }

  std::optional<Vertex> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  Vertex vertex(std::string_view name) const {
    if (auto v = find(name)) return *v;
    throw InputError("unknown vertex '" + std::string(name) + "'");
  }

  const std::vector<Arc>& arcs() const { return arcs_; }

  /// Out-neighbours of v in ascending implicit order.
  const std::vector<Vertex>& successors(Vertex v) const { return successors_.at(v); }
  const std::vector<std::vector<Vertex>>& adjacency() const { return successors_; }

  bool has_arc(Arc a) const {
    if (a.from >= successors_.size()) return false;
    const auto& succ = successors_[a.from];
    return std::binary_search(succ.begin(), succ.end(), a.to);
  }

  bool is_vertex(Vertex v) const { return v < names_.size(); }

  void require_vertices(const VertexSet& set, std::string_view what) const {
    if (!std::is_sorted(set.begin(), set.end()) ||
        std::adjacent_find(set.begin(), set.end()) != set.end())
      throw InputError(std::string(what) + " must be sorted and duplicate-free");
    if (!set.empty() && set.back() >= names_.size())
      throw InputError(std::string(what) + " contains an unknown vertex");
  }

  std::string describe(const VertexSet& set) const {
    std::string out = "{";
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (i) out += ' ';
      out += name(set[i]);
    }
    return out + "}";
  }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.names_ == b.names_ && a.arcs_ == b.arcs_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Arc> arcs_;
  std::map<std::string, Vertex, std::less<>> index_;
  std::vector<std::vector<Vertex>> successors_;
};

/// A walk without repeated vertices. A single vertex is a path of length 0.
struct Path {
  std::vector<Vertex> vertices;

  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }

  std::vector<Arc> arcs() const {
    std::vector<Arc> out;
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
      out.push_back({vertices[i], vertices[i + 1]});
    return out;
  }

  friend auto operator<=>(const Path&, const Path&) = default;
};

/// Vertex-disjoint paths, one per start vertex, kept sorted by start vertex.
struct Routing {
  std::vector<Path> paths;

  VertexSet starts() const {
    VertexSet out;
    for (const Path& p : paths) out.push_back(p.front());
    return make_vertex_set(std::move(out));
  }

  VertexSet ends() const {
    VertexSet out;
    for (const Path& p : paths) out.push_back(p.back());
    return make_vertex_set(std::move(out));
  }

  /// Traversed arc set, sorted.
  std::vector<Arc> arcs() const {
    std::vector<Arc> out;
    for (const Path& p : paths) {
      auto a = p.arcs();
      out.insert(out.end(), a.begin(), a.end());
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  const Path* path_from(Vertex start) const {
    for (const Path& p : paths)
      if (p.front() == start) return &p;
    return nullptr;
  }

  friend auto operator<=>(const Routing&, const Routing&) = default;
};

inline std::string describe(const Digraph& d, const Path& p) {
  std::string out;
  for (Vertex v : p.vertices) out += d.name(v);
  return out;
}

/// Renders a routing the way the worked examples write it, e.g. "{fxb, gyc}".
inline std::string describe(const Digraph& d, const Routing& r) {
  std::string out = "{";
  for (std::size_t i = 0; i < r.paths.size(); ++i) {
    if (i) out += ", ";
    out += describe(d, r.paths[i]);
  }
  return out + "}";
}

/// All paths from u to v; contains the single-vertex path when u == v.
inline std::vector<Path> enumerate_paths(const Digraph& d, Vertex u, Vertex v) {
  if (!d.is_vertex(u) || !d.is_vertex(v)) throw InputError("unknown vertex");
  std::vector<Path> out;
  std::vector<char> on_path(d.vertex_count(), 0);
  Path current;
  std::function<void(Vertex)> dfs = [&](Vertex x) {
    current.vertices.push_back(x);
    on_path[x] = 1;
    if (x == v) {
      out.push_back(current);
    } else {
      for (Vertex y : d.successors(x))
        if (!on_path[y]) dfs(y);
    }
    on_path[x] = 0;
    current.vertices.pop_back();
  };
  dfs(u);
  std::sort(out.begin(), out.end());
  return out;
}

/// True iff X can be routed to T by vertex-disjoint paths.
inline bool has_routing(const Digraph& d, const VertexSet& starts, const VertexSet& targets) {
  d.require_vertices(starts, "start set");
  d.require_vertices(targets, "target set");
  detail::DisjointPathCounter counter(d.adjacency());
  return counter.count(starts, targets) == starts.size();
}

/// Largest number of elements of `starts` that can be routed to `targets`
/// simultaneously.
inline std::size_t max_routable(const Digraph& d, const VertexSet& starts,
                                const VertexSet& targets) {
  d.require_vertices(starts, "start set");
  d.require_vertices(targets, "target set");
  detail::DisjointPathCounter counter(d.adjacency());
  return counter.count(starts, targets);
}

/// Calls `visit` once for every routing X => T. The paths of each routing are
/// ordered by start vertex. Partial assignments that cannot be completed are
/// cut off with a disjoint-path feasibility check.
inline void for_each_routing(const Digraph& d, const VertexSet& starts,
                             const VertexSet& targets,
                             const std::function<void(const Routing&)>& visit) {
  d.require_vertices(starts, "start set");
  d.require_vertices(targets, "target set");

  const std::size_t n = d.vertex_count();
  std::vector<char> is_target(n, 0);
  for (Vertex t : targets) is_target[t] = 1;

  // blocked[v]: v lies on a chosen path or is the start of a path that has not
  // been chosen yet.
  std::vector<char> blocked(n, 0);
  for (Vertex s : starts) blocked[s] = 1;

  detail::DisjointPathCounter counter(d.adjacency());
  Routing routing;
  std::vector<char> on_path(n, 0);

  std::function<void(std::size_t)> assign;
  std::function<void(Path&, std::size_t)> extend;

  auto remaining_feasible = [&](std::size_t next) {
    if (next == starts.size()) return true;
    std::span<const Vertex> rest(starts.data() + next, starts.size() - next);
    // The remaining start vertices are blocked only to keep other paths off
    // them; they must be available to their own paths here.
    for (Vertex s : rest) blocked[s] = 0;
    bool ok = counter.count(rest, targets, &blocked) == rest.size();
    for (Vertex s : rest) blocked[s] = 1;
    return ok;
  };

  extend = [&](Path& path, std::size_t index) {
    Vertex tip = path.back();
    if (is_target[tip]) {
      for (Vertex v : path.vertices) blocked[v] = 1;
      if (remaining_feasible(index + 1)) {
        routing.paths.push_back(path);
        assign(index + 1);
        routing.paths.pop_back();
      }
      for (Vertex v : path.vertices) blocked[v] = 0;
      blocked[path.front()] = 1;
    }
    for (Vertex w : d.successors(tip)) {
      if (blocked[w] || on_path[w]) continue;
      path.vertices.push_back(w);
      on_path[w] = 1;
      extend(path, index);
      on_path[w] = 0;
      path.vertices.pop_back();
    }
  };

  assign = [&](std::size_t index) {
    if (index == starts.size()) {
      visit(routing);
      return;
    }
    Path path{{starts[index]}};
    on_path[starts[index]] = 1;
    extend(path, index);
    on_path[starts[index]] = 0;
  };

  if (remaining_feasible(0)) assign(0);
}

inline std::vector<Routing> enumerate_routings(const Digraph& d, const VertexSet& starts,
                                               const VertexSet& targets) {
  std::vector<Routing> out;
  for_each_routing(d, starts, targets, [&](const Routing& r) { out.push_back(r); });
  return out;
}

/// The r-s-pivot: arcs leaving r are dropped and (s, x) is added for every
/// former arc (r, x) with x != s.
inline Digraph pivot(const Digraph& d, Vertex r, Vertex s) {
  if (!d.has_arc({r, s})) throw InputError("pivot requires the arc (r, s)");
  std::vector<Arc> arcs;
  for (const Arc& a : d.arcs())
    if (a.from != r) arcs.push_back(a);
  for (Vertex x : d.successors(r)) {
    if (x == s || d.has_arc({s, x})) continue;
    arcs.push_back({s, x});
  }
  return Digraph(d.names(), std::move(arcs));
}

/// A cycle walk c1 c2 ... cn with cn == c1 and c1 ... c(n-1) a path.
using CycleWalk = std::vector<Vertex>;

inline bool is_cycle_walk(const Digraph& d, const CycleWalk& c) {
  if (c.size() < 2 || c.front() != c.back()) return false;
  std::vector<char> seen(d.vertex_count(), 0);
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    if (!d.is_vertex(c[i]) || seen[c[i]]) return false;
    seen[c[i]] = 1;
    if (!d.has_arc({c[i], c[i + 1]})) return false;
  }
  return true;
}

/// The lexicographically least cycle walk among all cycles written from their
/// implicit-order-minimal vertex, or nothing if `d` is acyclic.
inline std::optional<CycleWalk> find_cycle(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  std::vector<char> avoid(n, 0);

  // Is `goal` reachable from `from` using only vertices >= floor that are not
  // in `avoid` (goal itself may be avoided)?
  auto reaches = [&](Vertex from, Vertex goal, Vertex floor) {
    if (from == goal) return true;
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : d.successors(u)) {
        if (w == goal) return true;
        if (w < floor || seen[w] || avoid[w]) continue;
        seen[w] = 1;
        stack.push_back(w);
      }
    }
    return false;
  };

  for (Vertex v = 0; v < n; ++v) {
    bool on_cycle = false;
    for (Vertex w : d.successors(v)) {
      if (w >= v && reaches(w, v, v)) {
        on_cycle = true;
        break;
      }
    }
    if (!on_cycle) continue;

    CycleWalk walk{v};
    std::fill(avoid.begin(), avoid.end(), 0);
    avoid[v] = 1;
    Vertex tip = v;
    while (true) {
      if (d.has_arc({tip, v})) {
        walk.push_back(v);
        return walk;
      }
      Vertex next = tip;
      for (Vertex w : d.successors(tip)) {
        if (w <= v || avoid[w]) continue;
        if (reaches(w, v, v)) {
          next = w;
          break;
        }
      }
      walk.push_back(next);
      avoid[next] = 1;
      tip = next;
    }
  }
  return std::nullopt;
}

inline bool is_acyclic(const Digraph& d) {
  // Kahn's algorithm; loops count as cycles.
  const std::size_t n = d.vertex_count();
  std::vector<std::size_t> indegree(n, 0);
  for (const Arc& a : d.arcs()) ++indegree[a.to];
  std::vector<Vertex> ready;
  for (Vertex v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  std::size_t removed = 0;
  while (!ready.empty()) {
    Vertex u = ready.back();
    ready.pop_back();
    ++removed;
    for (Vertex w : d.successors(u))
      if (--indegree[w] == 0) ready.push_back(w);
  }
  return removed == n;
}

/// Vertices in an order where every arc points forward. Requires acyclicity.
inline std::vector<Vertex> topological_order(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  std::vector<std::size_t> indegree(n, 0);
  for (const Arc& a : d.arcs()) ++indegree[a.to];
  std::vector<Vertex> ready, order;
  for (Vertex v = n; v-- > 0;)
    if (indegree[v] == 0) ready.push_back(v);
  while (!ready.empty()) {
    Vertex u = ready.back();
    ready.pop_back();
    order.push_back(u);
    for (Vertex w : d.successors(u))
      if (--indegree[w] == 0) ready.push_back(w);
  }
  if (order.size() != n) throw InputError("digraph is not acyclic");
  return order;
}

/// First name of the form <stem><index>, <stem><index>', ... not used in `d`.
inline std::string fresh_vertex_name(const Digraph& d, const std::string& stem,
                                     std::size_t index) {
  std::string name = stem + std::to_string(index);
  while (d.find(name)) name += '\'';
  return name;
}

/// Lifting of cycle c by (x, t): the arc (c1, c2) is replaced by
/// (c1, t), (x, c2), (x, t). The new vertices are appended x first, then t;
/// the three new arcs are appended in that order after the remaining arcs.
inline Digraph lift_cycle(const Digraph& d, const CycleWalk& cycle, const std::string& x,
                          const std::string& t) {
  if (!is_cycle_walk(d, cycle)) throw InputError("lift_cycle requires a cycle walk");
  if (x == t || d.find(x) || d.find(t) || x.empty() || t.empty())
    throw InputError("lifting vertices must be fresh and distinct");
  std::vector<std::string> names = d.names();
  const Vertex vx = static_cast<Vertex>(names.size());
  const Vertex vt = vx + 1;
  names.push_back(x);
  names.push_back(t);
  const Arc removed{cycle[0], cycle[1]};
  std::vector<Arc> arcs;
  for (const Arc& a : d.arcs())
    if (a != removed) arcs.push_back(a);
  arcs.push_back({cycle[0], vt});
  arcs.push_back({vx, cycle[1]});
  arcs.push_back({vx, vt});
  return Digraph(std::move(names), std::move(arcs));
}

struct LiftingStep {
  CycleWalk cycle;  // vertex indices of the digraph before this step
  Vertex x = 0;
  Vertex t = 0;
  Digraph result;
};

/// Record of a complete lifting: D(0) = original, D(i) = steps[i-1].result.
struct LiftingTrace {
  Digraph original;
  std::vector<LiftingStep> steps;

  const Digraph& result() const { return steps.empty() ? original : steps.back().result; }
  std::size_t length() const { return steps.size(); }

  VertexSet lifted_starts() const {
    VertexSet out;
    for (const auto& s : steps) out.push_back(s.x);
    return out;
  }
  VertexSet lifted_targets() const {
    VertexSet out;
    for (const auto& s : steps) out.push_back(s.t);
    return out;
  }
};

/// Lifts canonical cycles until the digraph is acyclic. Fresh vertices are
/// named x1, t1, x2, t2, ... (primed if a name is taken).
inline LiftingTrace complete_lifting(const Digraph& d) {
  LiftingTrace trace{d, {}};
  const Digraph* current = &trace.original;
  while (auto cycle = find_cycle(*current)) {
    const std::size_t i = trace.steps.size() + 1;
    std::string x = fresh_vertex_name(*current, "x", i);
    std::string t = fresh_vertex_name(*current, "t", i);
    if (t == x) t += '\'';
    Digraph next = lift_cycle(*current, *cycle, x, t);
    const Vertex vx = static_cast<Vertex>(current->vertex_count());
    trace.steps.push_back({std::move(*cycle), vx, vx + 1, std::move(next)});
    current = &trace.steps.back().result;
  }
  return trace;
}

}  // namespace heavyarc
