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

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "xoru/normal_form.h"
#include "xoru/oracle.h"
#include "xoru/unify.h"

namespace xoru {
namespace {

// Left-leaning chain over `leaves` atoms drawn from 8 constants and 8
// variables, so roughly half of the leaves cancel.
Term random_chain(std::size_t leaves, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto leaf = [&rng] {
    const auto k = rng() % 16;
    return k < 8 ? Term::constant(k + 1)
                 : Term::variable(std::string(1, static_cast<char>('A' + k - 8)));
  };
  Term t = leaf();
  for (std::size_t i = 1; i < leaves; ++i) t = Term::xor_of(t, leaf());
  return t;
}

std::vector<ProblemSet> problem_batch(const GeneratorParams& base, int count) {
  std::vector<ProblemSet> out;
  for (int i = 0; i < count; ++i) {
    GeneratorParams params = base;
    params.seed = static_cast<std::uint64_t>(i);
    out.push_back(generate_problem(params).problems);
  }
  return out;
}

void BM_Normalize(benchmark::State& state) {
  const Term t = random_chain(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(normalize(t));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Normalize)->RangeMultiplier(8)->Range(8, 1 << 15)->Complexity();

void BM_Solve(benchmark::State& state) {
  const GeneratorParams base{.max_equations = static_cast<std::size_t>(state.range(0)),
                             .max_vars = static_cast<std::size_t>(state.range(0)),
                             .max_consts = 6,
                             .max_atoms_per_eq = 8};
  const std::vector<ProblemSet> batch = problem_batch(base, 64);
  for (auto _ : state) {
    for (const ProblemSet& ps : batch) benchmark::DoNotOptimize(solve(ps));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(batch.size()));
}
BENCHMARK(BM_Solve)->Arg(5)->Arg(20)->Arg(80);

void BM_Gf2Solve(benchmark::State& state) {
  const GeneratorParams base{.max_equations = static_cast<std::size_t>(state.range(0)),
                             .max_vars = static_cast<std::size_t>(state.range(0)),
                             .max_consts = 6,
                             .max_atoms_per_eq = 8};
  std::vector<LinearSystem> systems;
  for (const ProblemSet& ps : problem_batch(base, 64)) {
    systems.push_back(to_linear_system(ps));
  }
  for (auto _ : state) {
    for (const LinearSystem& sys : systems) benchmark::DoNotOptimize(gf2_solve(sys));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(systems.size()));
}
BENCHMARK(BM_Gf2Solve)->Arg(5)->Arg(20)->Arg(80);

}  // namespace
}  // namespace xoru

BENCHMARK_MAIN();
