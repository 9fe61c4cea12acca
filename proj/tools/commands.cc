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

#include "commands.h"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <nlohmann/json.hpp>

#include "problem_file.h"
#include "xoru/normal_form.h"
#include "xoru/substitution.h"
#include "xoru/unify.h"

namespace xoru::cli {
namespace {

bool read_all(const std::string& path, std::string& text) {
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
    return !std::cin.bad();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  text.assign(std::istreambuf_iterator<char>(in), {});
  return !in.bad();
}

// Runs the requested self-checks; returns a failure description or "".
std::string self_check(const ProblemSet& ps, const SolveResult& result,
                       const SolveFlags& flags) {
  if (flags.check && result.unifier) {
    if (!solves_problems(*result.unifier, ps)) {
      return "result does not solve the problem";
    }
    if (!is_idempotent(*result.unifier) ||
        !has_disjoint_domain_and_range(*result.unifier)) {
      return "result is not idempotent";
    }
  }
  if (flags.oracle) {
    const bool oracle_solvable = gf2_solve(to_linear_system(ps)).has_value();
    if (oracle_solvable != result.unifier.has_value()) {
      return std::string("oracle disagrees: GF(2) elimination says ") +
             (oracle_solvable ? "solvable" : "unsolvable");
    }
  }
  return {};
}

}  // namespace

int run_solve(const std::string& path, const SolveFlags& flags,
              std::ostream& out, std::ostream& err) {
  std::string text;
  if (!read_all(path, text)) {
    err << path << ": cannot read file\n";
    return kExitInputError;
  }
  return run_solve_text(text, path, flags, out, err);
}

int run_solve_text(std::string_view text, std::string_view source,
                   const SolveFlags& flags, std::ostream& out,
                   std::ostream& err) {
  ProblemFile file;
  try {
    file = parse_problem_file(text);
  } catch (const ParseError& e) {
    err << source << ':' << e.what() << '\n';
    return kExitInputError;
  }

  SolveResult result;
  try {
    result = solve(file.problems);
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitCheckFailure;
  }
  if (const std::string failure = self_check(file.problems, result, flags);
      !failure.empty()) {
    err << "check failed: " << failure << '\n';
    return kExitCheckFailure;
  }

  if (flags.json) {
    nlohmann::json doc;
    doc["status"] = result.unifier ? "SOLUTION" : "UNSATISFIABLE";
    doc["steps"] = result.steps;
    if (result.unifier) {
      doc["substitution"] = nlohmann::json::object();
      for (const auto& [var, value] : result.unifier->bindings()) {
        doc["substitution"][var] = print_normal_form(value, file.constants);
      }
    } else {
      doc["substitution"] = nullptr;
    }
    out << doc.dump() << '\n';
  } else if (result.unifier) {
    out << "SOLUTION\n"
        << print_substitution(*result.unifier, file.constants) << '\n';
  } else {
    out << "UNSATISFIABLE\n";
  }
  return result.unifier ? kExitOk : kExitNegative;
}

int run_normalize(std::string_view term_text, std::ostream& out,
                  std::ostream& err) {
  ConstantTable constants;
  try {
    const Term t = parse_term(term_text, constants);
    out << print_normal_form(normalize(t), constants) << '\n';
  } catch (const ParseError& e) {
    err << "term:" << e.what() << '\n';
    return kExitInputError;
  }
  return kExitOk;
}

int run_equiv(std::string_view lhs_text, std::string_view rhs_text,
              std::ostream& out, std::ostream& err) {
  // One session, so equal names denote equal constants on both sides.
  ConstantTable constants;
  Term lhs;
  Term rhs;
  try {
    lhs = parse_term(lhs_text, constants);
  } catch (const ParseError& e) {
    err << "first term:" << e.what() << '\n';
    return kExitInputError;
  }
  try {
    rhs = parse_term(rhs_text, constants);
  } catch (const ParseError& e) {
    err << "second term:" << e.what() << '\n';
    return kExitInputError;
  }
  if (equiv(lhs, rhs)) {
    out << "EQUIV\n";
    return kExitOk;
  }
  out << "NOT-EQUIV\n";
  return kExitNegative;
}

int run_gen(const GeneratorParams& params, const std::string& out_path,
            std::ostream& out, std::ostream& err) {
  GeneratedProblem generated;
  try {
    generated = generate_problem(params);
  } catch (const std::invalid_argument& e) {
    err << "invalid parameters: " << e.what() << '\n';
    return kExitInputError;
  }

  std::ostringstream header;
  header << "generated by xoru gen --seed " << params.seed
         << " --max-equations " << params.max_equations << " --max-vars "
         << params.max_vars << " --max-consts " << params.max_consts
         << " --max-atoms " << params.max_atoms_per_eq;
  const std::string text =
      format_problem_file(generated.problems, generated.constants, header.str());

  if (out_path == "-") {
    out << text;
    err << "seed " << params.seed << '\n';
    return kExitOk;
  }
  std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
  if (!file || !(file << text) || !file.flush()) {
    err << out_path << ": cannot write file\n";
    return kExitInputError;
  }
  out << "seed " << params.seed << '\n';
  return kExitOk;
}

}  // namespace xoru::cli
