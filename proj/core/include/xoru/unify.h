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

// Unification modulo XOR.
//
// Every equation `lhs = rhs` is stored as the reduced sum S of both sides,
// meaning S = 0. The solver keeps a pair (gamma, lambda): gamma holds the
// unsolved sums and lambda the solved bindings. Two rules are applied until
// neither fits:
//
//   Trivial                 drop an empty sum (0 = 0) from gamma.
//   Variable substitution   take a sum x + S with variable x, remove it,
//                           apply {x := S} to the rest of gamma and to every
//                           lambda value, and record x := S in lambda.
//
// If gamma ends up empty, lambda is an idempotent most general unifier.
// Otherwise every remaining sum is a nonzero sum of constants and the
// problem has no solution. Each rule removes one sum from gamma, so a run
// takes at most as many steps as there are equations.

#ifndef XORU_UNIFY_H_
#define XORU_UNIFY_H_

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "xoru/normal_form.h"
#include "xoru/substitution.h"
#include "xoru/term.h"

namespace xoru {

// Raised when an internal solver invariant fails. Never caused by input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class Equation {
 public:
  Equation(Term lhs, Term rhs);

  const Term& lhs() const { return lhs_; }
  const Term& rhs() const { return rhs_; }
  // reduce(lhs ++ rhs), read as `sum() = 0`.
  const NormalForm& sum() const { return sum_; }

 private:
  Term lhs_;
  Term rhs_;
  NormalForm sum_;
};

using ProblemSet = std::vector<Equation>;

// Variables of the surface terms, including ones that cancel.
std::set<std::string> problem_variables(const ProblemSet& ps);

struct SolverState {
  std::vector<NormalForm> gamma;
  std::vector<std::pair<std::string, NormalForm>> lambda;
  std::size_t steps = 0;

  static SolverState initial(const ProblemSet& ps);

  std::size_t distinct_gamma_variables() const;
  // |gamma| + |variables of gamma|; drops at every rule application.
  std::size_t measure() const { return gamma.size() + distinct_gamma_variables(); }
};

// Removes the first empty sum, or nullopt if there is none.
std::optional<SolverState> rule_trivial(const SolverState& state);

// Isolates the least variable of the first non-ground sum, or nullopt if
// every sum is ground.
std::optional<SolverState> rule_var_subst(const SolverState& state);

// The two rules at an explicit position. `index` must name an empty sum for
// apply_trivial, and a sum containing `var` for apply_var_subst; otherwise
// std::invalid_argument.
SolverState apply_trivial(const SolverState& state, std::size_t index);
SolverState apply_var_subst(const SolverState& state, std::size_t index,
                            const std::string& var);

struct SolveOptions {
  // When set, each step picks a random applicable rule, sum and variable
  // instead of the deterministic first-fit choice.
  std::optional<std::uint64_t> shuffle_seed;
};

struct SolveResult {
  std::optional<Substitution> unifier;
  std::size_t steps = 0;
  // Initial |equations| + |distinct variables|.
  std::size_t step_bound = 0;
  // Measure before the first step and after every step.
  std::vector<std::size_t> measures;
};

// Throws InvariantViolation if the step bound, the decreasing measure or the
// solved-form shape of the result is ever violated.
SolveResult solve(const ProblemSet& ps, const SolveOptions& options = {});

inline std::optional<Substitution> xor_unification(const ProblemSet& ps) {
  return solve(ps).unifier;
}

// Every equation's sum collapses to 0 under `s`.
bool solves_problems(const Substitution& s, const ProblemSet& ps);

// theta(s(v)) == theta(v) for every candidate theta and every problem
// variable v. Throws std::invalid_argument if a candidate is not a unifier.
bool check_mgu(const Substitution& s, const ProblemSet& ps,
               std::span<const Substitution> candidates);

}  // namespace xoru

#endif  // XORU_UNIFY_H_
