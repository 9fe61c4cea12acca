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

#include "xoru/unify.h"

#include <random>

namespace xoru {

Equation::Equation(Term lhs, Term rhs)
    : lhs_(std::move(lhs)), rhs_(std::move(rhs)) {
  LTerm both = term_to_lterm(lhs_);
  LTerm right = term_to_lterm(rhs_);
  both.insert(both.end(), right.begin(), right.end());
  sum_ = reduce(std::move(both));
}

std::set<std::string> problem_variables(const ProblemSet& ps) {
  std::set<std::string> out;
  for (const Equation& eq : ps) {
    for (auto& v : variables_of(eq.lhs())) out.insert(std::move(v));
    for (auto& v : variables_of(eq.rhs())) out.insert(std::move(v));
  }
  return out;
}

SolverState SolverState::initial(const ProblemSet& ps) {
  SolverState state;
  state.gamma.reserve(ps.size());
  for (const Equation& eq : ps) state.gamma.push_back(eq.sum());
  return state;
}

std::size_t SolverState::distinct_gamma_variables() const {
  std::set<std::string> vars;
  for (const NormalForm& n : gamma) {
    for (auto& v : n.variables()) vars.insert(std::move(v));
  }
  return vars.size();
}

SolverState apply_trivial(const SolverState& state, std::size_t index) {
  if (index >= state.gamma.size() || !state.gamma[index].empty()) {
    throw std::invalid_argument("trivial rule needs an empty sum");
  }
  SolverState next = state;
  next.gamma.erase(next.gamma.begin() + static_cast<std::ptrdiff_t>(index));
  ++next.steps;
  return next;
}

SolverState apply_var_subst(const SolverState& state, std::size_t index,
                            const std::string& var) {
  if (index >= state.gamma.size() ||
      !state.gamma[index].contains_variable(var)) {
    throw std::invalid_argument("variable substitution needs a sum holding " +
                                var);
  }
  // x + S = 0 gives x := S.
  const NormalForm rest = xor_sum(state.gamma[index],
                                  NormalForm::from_sorted({Atom::variable(var)}));
  if (rest.contains_variable(var)) {
    throw InvariantViolation("occurs check failed for " + var);
  }
  Substitution sigma;
  sigma.bind(var, rest);

  SolverState next;
  next.steps = state.steps + 1;
  next.gamma.reserve(state.gamma.size() - 1);
  for (std::size_t i = 0; i < state.gamma.size(); ++i) {
    if (i != index) next.gamma.push_back(apply(sigma, state.gamma[i]));
  }
  next.lambda.reserve(state.lambda.size() + 1);
  for (const auto& [bound, value] : state.lambda) {
    if (bound == var) {
      throw InvariantViolation(var + " is already solved");
    }
    next.lambda.emplace_back(bound, apply(sigma, value));
  }
  next.lambda.emplace_back(var, rest);
  return next;
}

std::optional<SolverState> rule_trivial(const SolverState& state) {
  for (std::size_t i = 0; i < state.gamma.size(); ++i) {
    if (state.gamma[i].empty()) return apply_trivial(state, i);
  }
  return std::nullopt;
}

std::optional<SolverState> rule_var_subst(const SolverState& state) {
  for (std::size_t i = 0; i < state.gamma.size(); ++i) {
    if (auto x = state.gamma[i].least_variable()) {
      return apply_var_subst(state, i, x->variable_name());
    }
  }
  return std::nullopt;
}

namespace {

std::optional<SolverState> random_step(const SolverState& state,
                                       std::mt19937_64& rng) {
  std::vector<std::size_t> trivial;
  std::vector<std::pair<std::size_t, std::string>> subst;
  for (std::size_t i = 0; i < state.gamma.size(); ++i) {
    if (state.gamma[i].empty()) trivial.push_back(i);
    for (auto& v : state.gamma[i].variables()) subst.emplace_back(i, std::move(v));
  }
  if (trivial.empty() && subst.empty()) return std::nullopt;
  const bool use_trivial =
      subst.empty() || (!trivial.empty() && rng() % 2 == 0);
  if (use_trivial) {
    return apply_trivial(state, trivial[rng() % trivial.size()]);
  }
  const auto& [index, var] = subst[rng() % subst.size()];
  return apply_var_subst(state, index, var);
}

void check_solved_form(const std::vector<std::pair<std::string, NormalForm>>& lambda) {
  std::set<std::string> bound;
  for (const auto& [var, value] : lambda) {
    if (!bound.insert(var).second) {
      throw InvariantViolation("variable " + var + " solved twice");
    }
  }
  for (const auto& [var, value] : lambda) {
    for (const auto& v : value.variables()) {
      if (bound.contains(v)) {
        throw InvariantViolation("solved variable " + v +
                                 " occurs in the binding of " + var);
      }
    }
  }
}

}  // namespace

SolveResult solve(const ProblemSet& ps, const SolveOptions& options) {
  SolverState state = SolverState::initial(ps);
  SolveResult result;
  result.step_bound = state.measure();
  result.measures.push_back(state.measure());

  std::optional<std::mt19937_64> rng;
  if (options.shuffle_seed) rng.emplace(*options.shuffle_seed);

  while (true) {
    std::optional<SolverState> next;
    if (rng) {
      next = random_step(state, *rng);
    } else {
      next = rule_trivial(state);
      if (!next) next = rule_var_subst(state);
    }
    if (!next) break;

    const std::size_t measure = next->measure();
    if (measure >= result.measures.back()) {
      throw InvariantViolation("termination measure did not decrease");
    }
    if (next->steps > result.step_bound) {
      throw InvariantViolation("step bound exceeded");
    }
    result.measures.push_back(measure);
    state = std::move(*next);
  }

  result.steps = state.steps;
  if (!state.gamma.empty()) return result;

  check_solved_form(state.lambda);
  Substitution s;
  for (auto& [var, value] : state.lambda) s.bind(var, std::move(value));
  result.unifier = std::move(s);
  return result;
}

bool solves_problems(const Substitution& s, const ProblemSet& ps) {
  for (const Equation& eq : ps) {
    if (!apply(s, eq.sum()).empty()) return false;
  }
  return true;
}

bool check_mgu(const Substitution& s, const ProblemSet& ps,
               std::span<const Substitution> candidates) {
  for (const Substitution& theta : candidates) {
    if (!solves_problems(theta, ps)) {
      throw std::invalid_argument("check_mgu candidate is not a unifier");
    }
  }
  const std::set<std::string> vars = problem_variables(ps);
  for (const Substitution& theta : candidates) {
    for (const std::string& v : vars) {
      const NormalForm var_nf = NormalForm::from_sorted({Atom::variable(v)});
      if (apply(theta, apply(s, var_nf)) != apply(theta, var_nf)) return false;
    }
  }
  return true;
}

}  // namespace xoru
