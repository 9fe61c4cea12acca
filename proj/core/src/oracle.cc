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

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace xoru {
namespace {

void collect_constants(const Term& t, std::set<ConstantId>& out) {
  for (const Atom& a : term_to_lterm(t)) {
    if (a.is_constant() && !a.is_unit()) out.insert(a.constant_id());
  }
}

NormalForm constants_to_nf(const LinearSystem& sys, const BitRow& bits) {
  std::vector<Atom> atoms;
  for (std::size_t j = 0; j < sys.constants.size(); ++j) {
    if (bits.test(j)) atoms.push_back(Atom::constant(sys.constants[j]));
  }
  return NormalForm::from_sorted(std::move(atoms));
}

}  // namespace

LinearSystem to_linear_system(const ProblemSet& ps) {
  LinearSystem sys;
  const std::set<std::string> vars = problem_variables(ps);
  sys.variables.assign(vars.begin(), vars.end());
  std::set<ConstantId> consts;
  for (const Equation& eq : ps) {
    collect_constants(eq.lhs(), consts);
    collect_constants(eq.rhs(), consts);
  }
  sys.constants.assign(consts.begin(), consts.end());

  for (const Equation& eq : ps) {
    BitRow coeff(sys.variables.size());
    BitRow rhs(sys.constants.size());
    for (const Atom& a : eq.sum().atoms()) {
      if (a.is_variable()) {
        auto it = std::lower_bound(sys.variables.begin(), sys.variables.end(),
                                   a.variable_name());
        coeff.set(static_cast<std::size_t>(it - sys.variables.begin()));
      } else {
        auto it = std::lower_bound(sys.constants.begin(), sys.constants.end(),
                                   a.constant_id());
        rhs.set(static_cast<std::size_t>(it - sys.constants.begin()));
      }
    }
    sys.coefficients.push_back(std::move(coeff));
    sys.rhs.push_back(std::move(rhs));
  }
  return sys;
}

NormalForm decode_row(const LinearSystem& sys, std::size_t row) {
  std::vector<Atom> atoms;
  for (std::size_t j = 0; j < sys.constants.size(); ++j) {
    if (sys.rhs.at(row).test(j)) atoms.push_back(Atom::constant(sys.constants[j]));
  }
  for (std::size_t v = 0; v < sys.variables.size(); ++v) {
    if (sys.coefficients.at(row).test(v)) {
      atoms.push_back(Atom::variable(sys.variables[v]));
    }
  }
  return NormalForm::from_sorted(std::move(atoms));
}

Substitution GroundSolution::to_substitution(const LinearSystem& sys) const {
  Substitution s;
  for (std::size_t v = 0; v < sys.variables.size(); ++v) {
    s.bind(sys.variables[v], constants_to_nf(sys, particular[v]));
  }
  return s;
}

std::optional<GroundSolution> gf2_solve(const LinearSystem& sys) {
  const std::size_t num_vars = sys.variables.size();
  const std::size_t num_consts = sys.constants.size();
  std::vector<BitRow> coeff = sys.coefficients;
  std::vector<BitRow> rhs = sys.rhs;

  // Reduced row echelon form; pivots chosen by column order.
  std::vector<std::size_t> pivot_cols;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < num_vars && pivot_row < coeff.size(); ++col) {
    std::size_t r = pivot_row;
    while (r < coeff.size() && !coeff[r].test(col)) ++r;
    if (r == coeff.size()) continue;
    std::swap(coeff[r], coeff[pivot_row]);
    std::swap(rhs[r], rhs[pivot_row]);
    for (std::size_t other = 0; other < coeff.size(); ++other) {
      if (other != pivot_row && coeff[other].test(col)) {
        coeff[other] ^= coeff[pivot_row];
        rhs[other] ^= rhs[pivot_row];
      }
    }
    pivot_cols.push_back(col);
    ++pivot_row;
  }
  for (std::size_t r = pivot_row; r < coeff.size(); ++r) {
    if (rhs[r].any()) return std::nullopt;  // 0 = nonzero constant sum
  }

  GroundSolution sol;
  sol.particular.assign(num_vars, BitRow(num_consts));
  std::vector<bool> is_pivot(num_vars, false);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
    sol.particular[pivot_cols[i]] = rhs[i];
    is_pivot[pivot_cols[i]] = true;
  }
  for (std::size_t free = 0; free < num_vars; ++free) {
    if (is_pivot[free]) continue;
    BitRow vec(num_vars);
    vec.set(free);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
      if (coeff[i].test(free)) vec.set(pivot_cols[i]);
    }
    sol.nullspace.push_back(std::move(vec));
  }
  return sol;
}

std::vector<Substitution> sample_unifiers(const LinearSystem& sys,
                                          std::size_t count,
                                          std::uint64_t seed) {
  const std::optional<GroundSolution> sol = gf2_solve(sys);
  if (!sol) throw std::invalid_argument("cannot sample an unsolvable system");

  std::mt19937_64 rng(seed);
  std::vector<Substitution> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    GroundSolution sample = *sol;
    for (std::size_t j = 0; j < sys.constants.size(); ++j) {
      for (const BitRow& basis : sol->nullspace) {
        if (rng() % 2 == 0) continue;
        for (std::size_t v = 0; v < sys.variables.size(); ++v) {
          if (basis.test(v)) sample.particular[v].flip(j);
        }
      }
    }
    out.push_back(sample.to_substitution(sys));
  }
  return out;
}

namespace {

std::string variable_name(std::size_t i) {
  static constexpr const char* kNames[] = {"X", "Y", "Z", "U", "V", "W"};
  if (i < std::size(kNames)) return kNames[i];
  return "X" + std::to_string(i);
}

std::string constant_name(ConstantId id) {
  if (id <= 26) return std::string(1, static_cast<char>('a' + id - 1));
  return "k" + std::to_string(id);
}

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  // Uniform in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(rng_() % (hi - lo + 1));
  }
  bool chance(unsigned percent) { return rng_() % 100 < percent; }

  // Random bracketing of `atoms`, preserving their order.
  Term tree(std::span<const Atom> atoms) {
    if (atoms.empty()) return Term::zero();
    if (atoms.size() == 1) return atoms.front().to_term();
    const std::size_t split = between(1, atoms.size() - 1);
    return Term::xor_of(tree(atoms.first(split)), tree(atoms.subspan(split)));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

GeneratedProblem generate_problem(const GeneratorParams& params) {
  if (params.max_vars == 0 || params.max_consts == 0 ||
      params.max_atoms_per_eq == 0) {
    throw std::invalid_argument(
        "max_vars, max_consts and max_atoms_per_eq must be at least 1");
  }
  Generator gen(params.seed);
  GeneratedProblem out;
  for (ConstantId id = 1; id <= params.max_consts; ++id) {
    out.constants.intern(constant_name(id));
  }
  if (params.max_equations == 0) return out;

  const std::size_t num_eqs = gen.between(1, params.max_equations);
  const std::size_t num_vars = gen.between((params.max_vars + 1) / 2, params.max_vars);
  const std::size_t num_consts = gen.between(1, params.max_consts);
  for (std::size_t e = 0; e < num_eqs; ++e) {
    const std::size_t num_atoms = gen.between(1, params.max_atoms_per_eq);
    std::vector<Atom> atoms;
    for (std::size_t k = 0; k < num_atoms; ++k) {
      if (gen.chance(5)) {
        atoms.push_back(Atom::unit());
      } else if (gen.chance(45)) {
        atoms.push_back(Atom::variable(variable_name(gen.between(0, num_vars - 1))));
      } else {
        atoms.push_back(Atom::constant(gen.between(1, num_consts)));
      }
    }
    const std::size_t split = gen.between(0, atoms.size());
    const std::span<const Atom> all(atoms);
    out.problems.emplace_back(gen.tree(all.first(split)),
                              gen.tree(all.subspan(split)));
  }
  return out;
}

}  // namespace xoru
