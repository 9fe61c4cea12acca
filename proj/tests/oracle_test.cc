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

#include "xoru/oracle.h"

#include <gtest/gtest.h>

#include "test_support.h"

namespace xoru {
namespace {

using testing::brute_force_solvable;
using testing::c;

ProblemSet problems(std::initializer_list<const char*> lines) {
  ConstantTable table;
  for (const char* name : {"a", "b", "c"}) table.intern(name);
  ProblemSet ps;
  for (const char* line : lines) {
    auto [lhs, rhs] = parse_equation(line, table);
    ps.emplace_back(std::move(lhs), std::move(rhs));
  }
  return ps;
}

BitRow bits(const std::string& msb_first) { return BitRow(msb_first); }

TEST(ToLinearSystemTest, Examples) {
  const LinearSystem one = to_linear_system(problems({"X + a = b"}));
  EXPECT_EQ(one.variables, (std::vector<std::string>{"X"}));
  EXPECT_EQ(one.constants, (std::vector<ConstantId>{1, 2}));
  EXPECT_EQ(one.coefficients, (std::vector<BitRow>{bits("1")}));
  EXPECT_EQ(one.rhs, (std::vector<BitRow>{bits("11")}));

  const LinearSystem zero = to_linear_system(problems({"0 = 0"}));
  ASSERT_EQ(zero.coefficients.size(), 1u);
  EXPECT_TRUE(zero.coefficients[0].none());
  EXPECT_TRUE(zero.rhs[0].none());

  const LinearSystem ground = to_linear_system(problems({"a = b"}));
  EXPECT_TRUE(ground.variables.empty());
  EXPECT_EQ(ground.rhs, (std::vector<BitRow>{bits("11")}));
}

TEST(ToLinearSystemTest, KeepsCancelledVariablesAsZeroColumns) {
  const LinearSystem sys = to_linear_system(problems({"X + X = a + a"}));
  EXPECT_EQ(sys.variables, (std::vector<std::string>{"X"}));
  EXPECT_TRUE(sys.coefficients[0].none());
}

TEST(ToLinearSystemTest, RowsDecodeToEquationSums) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    GeneratorParams params;
    params.seed = seed;
    const ProblemSet ps = generate_problem(params).problems;
    const LinearSystem sys = to_linear_system(ps);
    ASSERT_EQ(sys.coefficients.size(), ps.size());
    for (std::size_t r = 0; r < ps.size(); ++r) {
      ASSERT_EQ(decode_row(sys, r), ps[r].sum());
    }
  }
}

TEST(Gf2SolveTest, Examples) {
  EXPECT_FALSE(gf2_solve(to_linear_system(problems({"a = b"}))));

  const LinearSystem one = to_linear_system(problems({"X + a = b"}));
  const auto sol = gf2_solve(one);
  ASSERT_TRUE(sol);
  EXPECT_EQ(sol->particular, (std::vector<BitRow>{bits("11")}));
  EXPECT_TRUE(sol->nullspace.empty());
  Substitution expected;
  expected.bind("X", NormalForm::from_sorted({c(1), c(2)}));
  EXPECT_EQ(sol->to_substitution(one), expected);

  const LinearSystem pair = to_linear_system(problems({"X + Y = 0"}));
  const auto free = gf2_solve(pair);
  ASSERT_TRUE(free);
  ASSERT_EQ(free->particular.size(), 2u);
  EXPECT_TRUE(free->particular[0].none() && free->particular[1].none());
  ASSERT_EQ(free->nullspace.size(), 1u);
  EXPECT_EQ(free->nullspace[0], bits("11"));
}

TEST(Gf2SolveTest, AgreesWithExhaustiveSearch) {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    GeneratorParams params{.max_equations = 4, .max_vars = 3, .max_consts = 3,
                           .max_atoms_per_eq = 6, .seed = seed};
    const ProblemSet ps = generate_problem(params).problems;
    const LinearSystem sys = to_linear_system(ps);
    const auto sol = gf2_solve(sys);
    ASSERT_EQ(sol.has_value(), brute_force_solvable(ps)) << "seed " << seed;
    if (sol) {
      ASSERT_TRUE(solves_problems(sol->to_substitution(sys), ps));
    }
  }
}

TEST(SampleUnifiersTest, Examples) {
  const LinearSystem one = to_linear_system(problems({"X + a = b"}));
  EXPECT_TRUE(sample_unifiers(one, 0, 1).empty());
  Substitution only;
  only.bind("X", NormalForm::from_sorted({c(1), c(2)}));
  for (const Substitution& s : sample_unifiers(one, 5, 9)) EXPECT_EQ(s, only);

  EXPECT_THROW(sample_unifiers(to_linear_system(problems({"a = b"})), 1, 1),
               std::invalid_argument);
}

TEST(SampleUnifiersTest, SamplesSolveAndVary) {
  const ProblemSet ps = problems({"X + Y = a + c"});
  const LinearSystem sys = to_linear_system(ps);
  std::set<std::string> seen;
  ConstantTable names;
  for (const Substitution& s : sample_unifiers(sys, 40, 3)) {
    ASSERT_TRUE(solves_problems(s, ps));
    seen.insert(print_substitution(s, names));
  }
  // X ranges over all four subsets of {a, c}.
  EXPECT_EQ(seen.size(), 4u);
}

TEST(SampleUnifiersTest, RandomProblemsSolve) {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    GeneratorParams params;
    params.seed = seed;
    const ProblemSet ps = generate_problem(params).problems;
    const LinearSystem sys = to_linear_system(ps);
    if (!gf2_solve(sys)) continue;
    ++checked;
    for (const Substitution& s : sample_unifiers(sys, 5, seed)) {
      ASSERT_TRUE(solves_problems(s, ps)) << "seed " << seed;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(GenerateProblemTest, ZeroEquations) {
  GeneratorParams params;
  params.max_equations = 0;
  EXPECT_TRUE(generate_problem(params).problems.empty());
}

TEST(GenerateProblemTest, Deterministic) {
  GeneratorParams params;
  params.seed = 42;
  const GeneratedProblem a = generate_problem(params);
  const GeneratedProblem b = generate_problem(params);
  ASSERT_EQ(a.problems.size(), b.problems.size());
  for (std::size_t i = 0; i < a.problems.size(); ++i) {
    EXPECT_EQ(a.problems[i].lhs(), b.problems[i].lhs());
    EXPECT_EQ(a.problems[i].rhs(), b.problems[i].rhs());
  }
}

TEST(GenerateProblemTest, RejectsZeroBounds) {
  for (auto field : {&GeneratorParams::max_vars, &GeneratorParams::max_consts,
                     &GeneratorParams::max_atoms_per_eq}) {
    GeneratorParams params;
    params.*field = 0;
    EXPECT_THROW(generate_problem(params), std::invalid_argument);
  }
}

TEST(GenerateProblemTest, RespectsBounds) {
  const GeneratorParams base{.max_equations = 5, .max_vars = 6, .max_consts = 6,
                             .max_atoms_per_eq = 8};
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    GeneratorParams params = base;
    params.seed = seed;
    const ProblemSet ps = generate_problem(params).problems;
    ASSERT_LE(ps.size(), base.max_equations);
    ASSERT_GE(ps.size(), 1u);
    ASSERT_LE(problem_variables(ps).size(), base.max_vars);
    for (const Equation& eq : ps) {
      std::size_t atoms = 0;
      for (const Term* side : {&eq.lhs(), &eq.rhs()}) {
        for (const Atom& a : term_to_lterm(*side)) {
          if (a.is_unit()) continue;
          ++atoms;
          if (a.is_constant()) ASSERT_LE(a.constant_id(), base.max_consts);
        }
      }
      ASSERT_LE(atoms, base.max_atoms_per_eq);
    }
  }
}

}  // namespace
}  // namespace xoru
