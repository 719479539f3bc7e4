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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "heavyarc/cli.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heavy arc orientations of gammoids"};
  app.require_subcommand(1);

  heavyarc::cli::CommandOptions options;
  std::string path;

  auto add = [&](const std::string& name, const std::string& description) {
    auto* sub = app.add_subcommand(name, description);
    sub->add_option("file", path, "input file, '-' for stdin")->required();
    sub->add_flag("--json", options.json, "emit JSON");
    return sub;
  };
  add("circuits", "list the circuits of the represented gammoid");
  add("orient", "print the heavy arc orientation")
      ->add_flag("--full", options.full, "print both members of every +- pair");
  add("lift", "print the complete-lifting trace and the lifted instance");
  add("axioms", "check the signed circuit axioms on an orientation file")
      ->add_flag("--as-is", options.as_is, "do not close the family under negation");
  add("verify", "cross-check the orientation against the linear-algebra oracle");

  CLI11_PARSE(app, argc, argv);

  options.command = app.get_subcommands().front()->get_name();
  try {
    options.input = read_input(path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return heavyarc::cli::kInputError;
  }
  return heavyarc::cli::run_command(options, std::cout, std::cerr);
}
