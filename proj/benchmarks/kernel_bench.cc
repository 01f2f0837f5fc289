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

#include "lieforge/eval.h"
#include "lieforge/hierarchy.h"
#include "lieforge/parse.h"

namespace lieforge {
namespace {

const JetSpec kSpec = real_pde_spec({"c"});

void BM_Multiply(benchmark::State& state) {
  Expr a = parse_expr("v_x^2 - w_x^2 + 3*v_x*w_xx + exp(-w)*cos(v) + t", kSpec);
  Expr b = parse_expr("w_xx - 2*v_x*w_x + sin(2*v) - c", kSpec);
  Expr p = a;
  for (int i = 1; i < state.range(0); ++i) p = p * b;
  for (auto _ : state) benchmark::DoNotOptimize(p * a);
}
BENCHMARK(BM_Multiply)->Arg(1)->Arg(2)->Arg(3);

void BM_Canonicalize(benchmark::State& state) {
  Expr e = pow(parse_expr("v_x + w_x*cos(v) + exp(w)*sin(v) + c", kSpec), 4);
  for (auto _ : state) benchmark::DoNotOptimize(to_canonical(e));
}
BENCHMARK(BM_Canonicalize);

void BM_ParsePrint(benchmark::State& state) {
  std::string text = catalogue_member(4).equations[0].rhs.str();
  for (auto _ : state) benchmark::DoNotOptimize(parse_expr(text, kSpec).str());
}
BENCHMARK(BM_ParsePrint);

void BM_HierarchyMember(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hierarchy_member(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_HierarchyMember)->DenseRange(1, 4);

void BM_EqualsZeroNumeric(benchmark::State& state) {
  Expr e = parse_expr("tan(v)*cos(v) - sin(v) + v_x*(tan(w)*cos(w) - sin(w))", kSpec);
  for (auto _ : state) benchmark::DoNotOptimize(equals_zero(e));
}
BENCHMARK(BM_EqualsZeroNumeric);

}  // namespace
}  // namespace lieforge
