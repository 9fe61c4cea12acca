// Copyright 2026 The xoru Authors
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

// xoru: unification and equivalence modulo exclusive-or.
//
//   xoru solve [--json] [--check] [--oracle] FILE
//   xoru normalize TERM
//   xoru equiv TERM TERM
//   xoru gen [--seed N] [--max-equations N] ... [OUT]
//
// Exit status: 0 solvable/equivalent, 1 unsatisfiable/not equivalent,
// 2 input error, 3 failed self-check.

#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "commands.h"

int main(int argc, char** argv) {
  using namespace xoru::cli;

  CLI::App app{"Unification and equivalence modulo exclusive-or", "xoru"};
  app.require_subcommand(1);

  std::string solve_path;
  SolveFlags solve_flags;
  auto* solve = app.add_subcommand("solve", "Compute a most general unifier");
  solve->add_option("file", solve_path, "Problem file, '-' for stdin")
      ->required();
  solve->add_flag("--json", solve_flags.json, "Emit a JSON object");
  solve->add_flag("--check", solve_flags.check,
                  "Verify the unifier solves the problem and is idempotent");
  solve->add_flag("--oracle", solve_flags.oracle,
                  "Cross-check solvability with GF(2) elimination");

  std::string normalize_text;
  auto* normalize = app.add_subcommand("normalize", "Print the canonical form");
  normalize->add_option("term", normalize_text)->required();

  std::string equiv_lhs;
  std::string equiv_rhs;
  auto* equiv = app.add_subcommand("equiv", "Decide equivalence modulo XOR");
  equiv->add_option("lhs", equiv_lhs)->required();
  equiv->add_option("rhs", equiv_rhs)->required();

  xoru::GeneratorParams gen_params;
  std::string gen_out = "-";
  auto* gen = app.add_subcommand("gen", "Write a random problem file");
  gen->add_option("--seed", gen_params.seed, "Generator seed");
  gen->add_option("--max-equations", gen_params.max_equations, "Maximum number of equations");
  gen->add_option("--max-vars", gen_params.max_vars, "Maximum number of distinct variables");
  gen->add_option("--max-consts", gen_params.max_consts, "Maximum number of distinct constants");
  gen->add_option("--max-atoms", gen_params.max_atoms_per_eq,
                  "Maximum atoms per equation");
  gen->add_option("out", gen_out, "Output path, '-' for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*solve) return run_solve(solve_path, solve_flags, std::cout, std::cerr);
    if (*normalize) return run_normalize(normalize_text, std::cout, std::cerr);
    if (*equiv) return run_equiv(equiv_lhs, equiv_rhs, std::cout, std::cerr);
    if (*gen) return run_gen(gen_params, gen_out, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
  }
  return kExitCheckFailure;
}
