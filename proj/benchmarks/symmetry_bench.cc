// Copyright 2026 The LieForge Authors.
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

#include <benchmark/benchmark.h>

#include "lieforge/hierarchy.h"
#include "lieforge/liealg.h"
#include "lieforge/symmetry.h"

namespace lieforge {
namespace {

void BM_Prolongation(benchmark::State& state) {
  VectorField x = catalogue_generators(2)[6];
  for (auto _ : state) benchmark::DoNotOptimize(prolong_generator(x, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Prolongation)->DenseRange(1, 4);

void BM_DeterminingSystemMember2(benchmark::State& state) {
  SolvedSystem s = solved_form(catalogue_member(2));
  AnsatzBasis b = make_ansatz(s.jet, {2, 0, 0, false});
  for (auto _ : state) benchmark::DoNotOptimize(determining_system(s, b));
}
BENCHMARK(BM_DeterminingSystemMember2)->Unit(benchmark::kMillisecond);

void BM_DiscoverMember4(benchmark::State& state) {
  PDESystem s = catalogue_member(4);
  AnsatzBasis b = make_ansatz(s.jet, {2, 2, 1, false});
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(discover_symmetries(s, b, threads));
}
BENCHMARK(BM_DiscoverMember4)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_StructureConstants(benchmark::State& state) {
  auto basis = catalogue_generators(2);
  for (auto _ : state) benchmark::DoNotOptimize(structure_constants(basis));
}
BENCHMARK(BM_StructureConstants)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace lieforge
