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

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

#include "heavyarc/digraph.hpp"
#include "heavyarc/gammoid.hpp"
#include "heavyarc/heavy_arc.hpp"
#include "heavyarc/instance_io.hpp"
#include "heavyarc/oracle.hpp"
#include "heavyarc/oriented.hpp"

namespace heavyarc::cli {

enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,  // axiom violation or oracle disagreement
  kInputError = 2,
};

struct CommandOptions {
  std::string command;  // circuits | orient | lift | axioms | verify
  std::string input;    // file contents
  bool full = false;    // orient: print both members of every +- pair
  bool json = false;
  bool as_is = false;   // axioms: do not close the family under negation first
};

namespace detail {

using nlohmann::json;

inline json names_json(const Digraph& d, const VertexSet& set) {
  json out = json::array();
  for (Vertex v : set) out.push_back(d.name(v));
  return out;
}

inline json signs_json(const SignedSubset& x) {
  json out = json::array();
  for (Sign s : x.signs()) out.push_back(static_cast<int>(s));
  return out;
}

inline json family_json(std::vector<SignedSubset> family) {
  std::sort(family.begin(), family.end());
  json out = json::array();
  for (const auto& x : family) out.push_back(signs_json(x));
  return out;
}

inline json instance_json(const RepresentedGammoid& g, const HeavyArcSignature& sig) {
  const Digraph& d = g.digraph;
  json arcs = json::array();
  for (const SignedArc& a : sig.ascending())
    arcs.push_back({{"sign", static_cast<int>(a.sign)},
                    {"from", d.name(a.arc.from)},
                    {"to", d.name(a.arc.to)}});
  return {{"vertices", d.names()},
          {"arcs", arcs},
          {"targets", names_json(d, g.targets)},
          {"ground", names_json(d, g.ground)}};
}

inline int run_circuits(const InstanceFile& inst, const CommandOptions& opt, std::ostream& out) {
  const auto& g = inst.gammoid;
  const CircuitFamily family = circuits(g);
  if (opt.json) {
    json members = json::array();
    for (const auto& c : family.members) members.push_back(names_json(g.digraph, c));
    out << json{{"ground", names_json(g.digraph, g.ground)}, {"circuits", members}}.dump(2)
        << '\n';
  } else {
    out << "ground " << g.digraph.describe(g.ground) << '\n';
    for (const auto& c : family.members) out << g.digraph.describe(c) << '\n';
  }
  return kSuccess;
}

// One signed subset per circuit: the signature anchored at the first element
// for acyclic digraphs, otherwise the member whose first sign is positive.
inline std::vector<SignedSubset> orientation_lines(const InstanceFile& inst,
                                                   const Orientation& o, bool full) {
  if (full) return o.members();
  const auto& g = inst.gammoid;
  if (!is_acyclic(g.digraph)) return o.representatives();
  std::vector<SignedSubset> lines;
  for (const auto& c : circuits(g).members)
    lines.push_back(circuit_signature(g, inst.signature, c, 0));
  return lines;
}

inline int run_orient(const InstanceFile& inst, const CommandOptions& opt, std::ostream& out) {
  const auto& g = inst.gammoid;
  const Orientation o = orient(g, inst.signature);
  const auto lines = orientation_lines(inst, o, opt.full);
  if (opt.json) {
    out << json{{"ground", names_json(g.digraph, g.ground)},
                {"acyclic", is_acyclic(g.digraph)},
                {"circuits", family_json(lines)}}
               .dump(2)
        << '\n';
  } else {
    out << "ground";
    for (Vertex e : g.ground) out << ' ' << g.digraph.name(e);
    out << '\n';
    for (const auto& x : lines) out << format_signed_subset(x, g.digraph) << '\n';
  }
  return kSuccess;
}

inline int run_lift(const InstanceFile& inst, const CommandOptions& opt, std::ostream& out) {
  const LiftedInstance lifted = lift_instance(inst.gammoid, inst.signature);
  const auto& steps = lifted.trace.steps;
  if (opt.json) {
    json trace = json::array();
    const Digraph* before = &lifted.trace.original;
    for (const auto& s : steps) {
      json cycle = json::array();
      for (Vertex v : s.cycle) cycle.push_back(before->name(v));
      trace.push_back({{"cycle", cycle}, {"x", s.result.name(s.x)}, {"t", s.result.name(s.t)}});
      before = &s.result;
    }
    out << json{{"liftings", steps.size()},
                {"steps", trace},
                {"instance", instance_json(lifted.gammoid, lifted.signature)}}
               .dump(2)
        << '\n';
  } else {
    out << "# complete lifting: " << steps.size() << " step(s)\n";
    const Digraph* before = &lifted.trace.original;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      const auto& s = steps[i];
      out << "# step " << i + 1 << ": cycle ";
      for (Vertex v : s.cycle) out << before->name(v);
      out << " lifted by (" << s.result.name(s.x) << ", " << s.result.name(s.t) << ")\n";
      before = &s.result;
    }
    out << print_instance(lifted.gammoid, lifted.signature);
  }
  return kSuccess;
}

inline int run_axioms(const CommandOptions& opt, std::ostream& out) {
  const OrientationFile file = parse_orientation(opt.input);
  std::vector<SignedSubset> family = file.members;
  if (!opt.as_is) family = Orientation::closure(file.ground(), file.members).members();
  const AxiomReport report = check_circuit_axioms(family);
  auto name = [&](Vertex v) -> const std::string& { return file.names[v]; };
  if (opt.json) {
    json violations = json::array();
    for (const auto& v : report.violations) {
      json entry{{"axiom", axiom_name(v.axiom)}, {"x", signs_json(v.x)}};
      if (v.y) entry["y"] = signs_json(*v.y);
      if (v.e) entry["e"] = name(*v.e);
      if (v.f) entry["f"] = name(*v.f);
      violations.push_back(entry);
    }
    out << json{{"ground", file.names}, {"ok", report.ok()}, {"violations", violations}}.dump(2)
        << '\n';
  } else if (report.ok()) {
    out << "all circuit axioms hold (" << family.size() << " signed circuits)\n";
  } else {
    for (const auto& v : report.violations) {
      out << axiom_name(v.axiom) << " violated: X = " << format_signed_subset(v.x, name);
      if (v.y) out << ", Y = " << format_signed_subset(*v.y, name);
      if (v.e) out << ", e = " << name(*v.e);
      if (v.f) out << ", f = " << name(*v.f);
      out << '\n';
    }
  }
  return report.ok() ? kSuccess : kFailure;
}

inline int run_verify(const InstanceFile& inst, const CommandOptions& opt, std::ostream& out) {
  const auto& g = inst.gammoid;
  const bool acyclic = is_acyclic(g.digraph);
  const Orientation combinatorial = orient(g, inst.signature);
  Orientation oracle;
  std::size_t liftings = 0;
  if (acyclic) {
    oracle = oracle_orientation(g, inst.signature);
  } else {
    const LiftedInstance lifted = lift_instance(g, inst.signature);
    liftings = lifted.trace.length();
    oracle = contract_orientation(oracle_orientation(lifted.gammoid, lifted.signature), g.ground);
  }
  const bool orientations_agree = compare_orientations(combinatorial, oracle);
  const bool supports_match = underlying_matroid(combinatorial) == circuits(g);
  const AxiomReport report = check_circuit_axioms(combinatorial);
  const bool agreement = orientations_agree && supports_match && report.ok();

  if (opt.json) {
    out << json{{"agreement", agreement},
                {"acyclic", acyclic},
                {"liftings", liftings},
                {"signed_circuits", combinatorial.size()},
                {"orientations_equal", orientations_agree},
                {"supports_match_circuits", supports_match},
                {"axioms_ok", report.ok()},
                {"ground", names_json(g.digraph, g.ground)},
                {"combinatorial", family_json(combinatorial.members())},
                {"oracle", family_json(oracle.members())}}
               .dump(2)
        << '\n';
  } else {
    out << (acyclic ? "acyclic" : "cyclic") << " representation";
    if (!acyclic) out << ", " << liftings << " lifting(s)";
    out << "; " << combinatorial.size() << " signed circuits\n";
    out << "heavy arc orientation vs linear-algebra oracle: "
        << (orientations_agree ? "equal" : "DIFFERENT") << '\n';
    out << "supports vs circuits of the gammoid: " << (supports_match ? "equal" : "DIFFERENT")
        << '\n';
    out << "circuit axioms: " << (report.ok() ? "hold" : "VIOLATED") << '\n';
    out << (agreement ? "agreement" : "disagreement") << '\n';
  }
  return agreement ? kSuccess : kFailure;
}

}  // namespace detail

/// Runs one subcommand on the given input text. Errors are written to `err`
/// and reported through the exit code.
inline int run_command(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    if (opt.command == "axioms") return detail::run_axioms(opt, out);
    if (opt.command != "circuits" && opt.command != "orient" && opt.command != "lift" &&
        opt.command != "verify") {
      err << "error: unknown command '" << opt.command << "'\n";
      return kInputError;
    }
    const InstanceFile inst = parse_instance(opt.input);
    if (opt.command == "circuits") return detail::run_circuits(inst, opt, out);
    if (opt.command == "orient") return detail::run_orient(inst, opt, out);
    if (opt.command == "lift") return detail::run_lift(inst, opt, out);
    return detail::run_verify(inst, opt, out);
  } catch (const std::exception& e) {
    err << "error: " << opt.command << ": " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace heavyarc::cli
