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

// Line-oriented text formats.
//
// Instance file:
//
//   # comment
//   vertices a b c d        listing order = implicit vertex order
//   arc + a b               one line per arc, lightest first
//   arc - b c
//   targets c d
//   ground a b
//
// Orientation file: a `ground` line followed by signed subsets such as
// `{+f +g -i}`, one per line.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "heavyarc/digraph.hpp"
#include "heavyarc/gammoid.hpp"
#include "heavyarc/heavy_arc.hpp"
#include "heavyarc/oriented.hpp"
#include "heavyarc/types.hpp"

namespace heavyarc {

/// Input text that does not follow a file format. The message starts with
/// "line N:" when a line can be blamed.
class ParseError : public InputError {
 public:
  using InputError::InputError;
};

struct InstanceFile {
  RepresentedGammoid gammoid;
  HeavyArcSignature signature;
};

namespace detail {

inline std::vector<std::string> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string> tokens;
  std::istringstream in{std::string(line)};
  for (std::string token; in >> token;) tokens.push_back(token);
  return tokens;
}

[[noreturn]] inline void fail_at(std::size_t line, const std::string& message) {
  throw ParseError("line " + std::to_string(line) + ": " + message);
}

inline bool valid_vertex_name(std::string_view name) {
  if (name.empty() || name.front() == '+' || name.front() == '-') return false;
  return std::none_of(name.begin(), name.end(), [](char ch) {
    return ch == '{' || ch == '}' || ch == '#' || ch == ',' ||
           static_cast<unsigned char>(ch) <= ' ';
  });
}

}  // namespace detail

inline InstanceFile parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::optional<std::vector<std::string>> names;
  std::map<std::string, Vertex, std::less<>> index;
  std::vector<SignedArc> arcs;
  std::optional<VertexSet> targets, ground;
  std::map<Arc, std::size_t> arc_lines;

  auto lookup = [&](const std::string& name, std::size_t line_no) {
    auto it = index.find(name);
    if (it == index.end()) detail::fail_at(line_no, "unknown vertex '" + name + "'");
    return it->second;
  };

  auto read_set = [&](const std::vector<std::string>& tokens, std::size_t line_no) {
    if (!names) detail::fail_at(line_no, "'" + tokens[0] + "' before 'vertices'");
    std::vector<Vertex> out;
    for (std::size_t i = 1; i < tokens.size(); ++i) out.push_back(lookup(tokens[i], line_no));
    VertexSet set = make_vertex_set(out);
    if (set.size() != out.size())
      detail::fail_at(line_no, "vertex listed twice in '" + tokens[0] + "'");
    return set;
  };

  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    auto tokens = detail::tokenize(line);
    if (tokens.empty()) continue;
    const std::string& keyword = tokens[0];
    if (keyword == "vertices") {
      if (names) detail::fail_at(line_no, "duplicate 'vertices' section");
      names.emplace();
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (!detail::valid_vertex_name(tokens[i]))
          detail::fail_at(line_no, "invalid vertex name '" + tokens[i] + "'");
        if (!index.emplace(tokens[i], static_cast<Vertex>(names->size())).second)
          detail::fail_at(line_no, "duplicate vertex '" + tokens[i] + "'");
        names->push_back(tokens[i]);
      }
    } else if (keyword == "arc") {
      if (!names) detail::fail_at(line_no, "'arc' before 'vertices'");
      if (tokens.size() != 4) detail::fail_at(line_no, "expected 'arc <+|-> <from> <to>'");
      Sign sign;
      if (tokens[1] == "+")
        sign = 1;
      else if (tokens[1] == "-")
        sign = -1;
      else
        detail::fail_at(line_no, "arc sign must be '+' or '-', got '" + tokens[1] + "'");
      Arc a{lookup(tokens[2], line_no), lookup(tokens[3], line_no)};
      if (auto [it, inserted] = arc_lines.emplace(a, line_no); !inserted)
        detail::fail_at(line_no, "duplicate arc (" + tokens[2] + ", " + tokens[3] +
                                     "), first listed on line " + std::to_string(it->second));
      arcs.push_back({a, sign});
    } else if (keyword == "targets") {
      if (targets) detail::fail_at(line_no, "duplicate 'targets' section");
      targets = read_set(tokens, line_no);
    } else if (keyword == "ground") {
      if (ground) detail::fail_at(line_no, "duplicate 'ground' section");
      ground = read_set(tokens, line_no);
    } else {
      detail::fail_at(line_no, "unknown keyword '" + keyword + "'");
    }
  }
  if (!names) throw ParseError("missing 'vertices' section");
  if (!targets) throw ParseError("missing 'targets' section");
  if (!ground) throw ParseError("missing 'ground' section");

  std::vector<Arc> plain;
  for (const auto& a : arcs) plain.push_back(a.arc);
  Digraph d(std::move(*names), std::move(plain));
  return {RepresentedGammoid(std::move(d), std::move(*targets), std::move(*ground)),
          HeavyArcSignature(std::move(arcs))};
}

/// Canonical text form; arcs are written in ascending signature order.
inline std::string print_instance(const RepresentedGammoid& g, const HeavyArcSignature& sig) {
  sig.require_covers(g.digraph);
  const Digraph& d = g.digraph;
  std::string out = "vertices";
  for (const auto& name : d.names()) out += ' ' + name;
  out += '\n';
  for (const SignedArc& a : sig.ascending())
    out += "arc " + std::string(a.sign > 0 ? "+" : "-") + ' ' + d.name(a.arc.from) + ' ' +
           d.name(a.arc.to) + '\n';
  out += "targets";
  for (Vertex t : g.targets) out += ' ' + d.name(t);
  out += "\nground";
  for (Vertex e : g.ground) out += ' ' + d.name(e);
  out += '\n';
  return out;
}

inline std::string print_instance(const InstanceFile& f) {
  return print_instance(f.gammoid, f.signature);
}

/// `{+f +g -i}` with elements in implicit order; `name` maps ground vertices
/// to their names.
template <class NameOf>
std::string format_signed_subset(const SignedSubset& x, NameOf name) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < x.ground().size(); ++i) {
    Sign s = x.signs()[i];
    if (s == 0) continue;
    if (!first) out += ' ';
    first = false;
    out += (s > 0 ? '+' : '-');
    out += name(x.ground()[i]);
  }
  return out + "}";
}

inline std::string format_signed_subset(const SignedSubset& x, const Digraph& d) {
  return format_signed_subset(x, [&](Vertex v) -> const std::string& { return d.name(v); });
}

/// A standalone orientation: ground element names in implicit order and the
/// signed subsets over vertex indices 0..n-1.
struct OrientationFile {
  std::vector<std::string> names;
  std::vector<SignedSubset> members;

  VertexSet ground() const {
    VertexSet out(names.size());
    for (Vertex i = 0; i < out.size(); ++i) out[i] = i;
    return out;
  }
};

inline SignedSubset parse_signed_subset(std::string_view text, const VertexSet& ground,
                                        const std::map<std::string, Vertex, std::less<>>& index,
                                        std::size_t line_no) {
  std::string body(text);
  if (body.size() < 2 || body.front() != '{' || body.back() != '}')
    detail::fail_at(line_no, "signed subset must be written as '{+a -b ...}'");
  body = body.substr(1, body.size() - 2);
  SignedSubset out(ground);
  std::istringstream in(body);
  for (std::string token; in >> token;) {
    if (token.size() < 2 || (token[0] != '+' && token[0] != '-'))
      detail::fail_at(line_no, "element '" + token + "' needs a '+' or '-' prefix");
    auto it = index.find(token.substr(1));
    if (it == index.end()) detail::fail_at(line_no, "unknown ground element '" + token.substr(1) + "'");
    if (out[it->second] != 0) detail::fail_at(line_no, "element '" + token.substr(1) + "' listed twice");
    out.set(it->second, token[0] == '+' ? 1 : -1);
  }
  return out;
}

inline OrientationFile parse_orientation(std::string_view text) {
  std::istringstream in{std::string(text)};
  OrientationFile file;
  std::map<std::string, Vertex, std::less<>> index;
  bool have_ground = false;
  VertexSet ground;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    auto tokens = detail::tokenize(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "ground") {
      if (have_ground) detail::fail_at(line_no, "duplicate 'ground' line");
      have_ground = true;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (!detail::valid_vertex_name(tokens[i]))
          detail::fail_at(line_no, "invalid element name '" + tokens[i] + "'");
        if (!index.emplace(tokens[i], static_cast<Vertex>(file.names.size())).second)
          detail::fail_at(line_no, "duplicate ground element '" + tokens[i] + "'");
        file.names.push_back(tokens[i]);
      }
      ground = file.ground();
      continue;
    }
    if (!have_ground) detail::fail_at(line_no, "signed subset before 'ground' line");
    std::string joined;
    for (const auto& t : tokens) joined += (joined.empty() ? "" : " ") + t;
    file.members.push_back(parse_signed_subset(joined, ground, index, line_no));
  }
  if (!have_ground) throw ParseError("missing 'ground' line");
  return file;
}

}  // namespace heavyarc
