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

// Independent checker for the unifier: a problem is read as a linear system
// over GF(2) (one unknown per variable, one right-hand column per constant)
// and solved by Gaussian elimination. Only ground solutions are produced. A
// solvable problem always has one, since instantiating the free variables
// of its mgu with 0 leaves a sum of constants.
//
// Also hosts the seeded random problem generator used by tests and `gen`.

#ifndef XORU_ORACLE_H_
#define XORU_ORACLE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "xoru/normal_form.h"
#include "xoru/substitution.h"
#include "xoru/term.h"
#include "xoru/unify.h"

namespace xoru {

using BitRow = boost::dynamic_bitset<>;

struct LinearSystem {
  std::vector<std::string> variables;  // column order of `coefficients`
  std::vector<ConstantId> constants;   // column order of `rhs`
  std::vector<BitRow> coefficients;    // one row per equation
  std::vector<BitRow> rhs;
};

// Indices are the problem's surface variables and non-unit constants, both
// in atom order.
LinearSystem to_linear_system(const ProblemSet& ps);

// The sum encoded by one row.
NormalForm decode_row(const LinearSystem& sys, std::size_t row);

struct GroundSolution {
  // particular[v] is the constant set assigned to variables[v].
  std::vector<BitRow> particular;
  // Basis of the coefficient nullspace; each vector is over `variables`.
  std::vector<BitRow> nullspace;

  Substitution to_substitution(const LinearSystem& sys) const;
};

// nullopt iff the system is inconsistent.
std::optional<GroundSolution> gf2_solve(const LinearSystem& sys);

// `count` ground unifiers, each the particular solution plus a random
// nullspace combination per constant column. Throws std::invalid_argument if
// the system is unsolvable.
std::vector<Substitution> sample_unifiers(const LinearSystem& sys,
                                          std::size_t count,
                                          std::uint64_t seed);

struct GeneratorParams {
  std::size_t max_equations = 5;
  std::size_t max_vars = 6;
  std::size_t max_consts = 6;
  std::size_t max_atoms_per_eq = 8;
  std::uint64_t seed = 1;
};

struct GeneratedProblem {
  ProblemSet problems;
  // Names the constants a, b, c, ... in id order.
  ConstantTable constants;
};

// Deterministic in `params`. Throws std::invalid_argument if max_vars,
// max_consts or max_atoms_per_eq is 0.
GeneratedProblem generate_problem(const GeneratorParams& params);

}  // namespace xoru

#endif  // XORU_ORACLE_H_
