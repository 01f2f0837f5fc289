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

#include <gtest/gtest.h>

#include <random>

#include "lieforge/liealg.h"
#include "lieforge/parse.h"

namespace lieforge {
namespace {

const JetSpec kSpec = real_pde_spec();

VectorField random_field(std::mt19937_64& rng) {
  static const char* kPieces[] = {"1", "t", "x", "v", "w", "t*x", "v^2", "sin(v)", "exp(w)",
                                  "x*cos(v)"};
  auto pick = [&] { return kPieces[std::uniform_int_distribution<int>(0, 9)(rng)]; };
  auto coef = [&] { return std::to_string(std::uniform_int_distribution<int>(-3, 3)(rng)); };
  std::map<std::string, std::string> comps;
  for (const char* name : {"t", "x", "v", "w"}) {
    comps[name] = coef() + "*" + pick() + " + " + coef() + "*" + pick();
  }
  return make_field(kSpec, comps);
}

TEST(Bracket, ElementaryPairs) {
  VectorField dt = make_field(kSpec, {{"t", "1"}});
  VectorField scale = make_field(kSpec, {{"t", "2*t"}, {"x", "x"}});
  EXPECT_EQ(lie_bracket(dt, scale), 2 * dt);
  EXPECT_TRUE(lie_bracket(scale, scale).is_zero());
}

TEST(Bracket, AntisymmetryBilinearityJacobi) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    VectorField x = random_field(rng), y = random_field(rng), z = random_field(rng);
    EXPECT_EQ(lie_bracket(x, y), Expr(-1) * lie_bracket(y, x));
    EXPECT_EQ(lie_bracket(x + Expr(3) * y, z), lie_bracket(x, z) + Expr(3) * lie_bracket(y, z));
    VectorField jac = lie_bracket(x, lie_bracket(y, z)) + lie_bracket(y, lie_bracket(z, x)) +
                      lie_bracket(z, lie_bracket(x, y));
    EXPECT_TRUE(jac.is_zero());
  }
}

TEST(Structure, Member2TableIsClosed) {
  StructureTable t = structure_constants(catalogue_generators(2));
  EXPECT_TRUE(t.is_closed());
  EXPECT_TRUE(t.is_antisymmetric());
  EXPECT_TRUE(jacobi_check(t));
  EXPECT_FALSE(compare_with_catalogue(t, catalogue_brackets("a")).empty());
  AlgebraSignature s = algebra_signature(t);
  EXPECT_EQ(s.dimension, 7);
  // Contains sl(2): the derived algebra stops at dimension 6.
  EXPECT_FALSE(s.solvable);
  EXPECT_EQ(s.derived_series, (std::vector<int>{7, 6}));
}

TEST(Structure, Member3Brackets) {
  auto gens = catalogue_generators(3);
  gens[1] = member3_scaling();
  StructureTable t = structure_constants(gens);
  ASSERT_TRUE(t.is_closed());
  // [X5, X7] = -2 X6 and [X5, X6] = -X7/2 (zero-based 4, 6, 5).
  EXPECT_EQ(t.c[4][6][5], Expr(-2));
  EXPECT_EQ(t.c[4][5][6], Expr(Rational(-1, 2)));
  EXPECT_TRUE(jacobi_check(t));
}

TEST(Structure, ReducedThirdOrderAlgebra) {
  StructureTable t = structure_constants(catalogue_reduced_generators("f"));
  ASSERT_TRUE(t.is_closed());
  EXPECT_TRUE(compare_with_catalogue(t, catalogue_brackets("f")).empty());
  AlgebraSignature s = algebra_signature(t);
  EXPECT_FALSE(s.solvable);
  EXPECT_EQ(s.center, 2);
  EXPECT_EQ(s.abelian_summand, 2);
  EXPECT_EQ(s.derived_series.back(), 3);
}

TEST(Structure, Member4IsAbelian) {
  AlgebraSignature s = algebra_signature(structure_constants(catalogue_generators(4)));
  EXPECT_TRUE(s.abelian);
  EXPECT_TRUE(s.nilpotent);
  EXPECT_EQ(s.center, 4);
}

TEST(Structure, RejectsDependentBasis) {
  VectorField dt = make_field(kSpec, {{"t", "1"}});
  EXPECT_THROW(structure_constants({dt, Expr(2) * dt}), DomainError);
}

TEST(Structure, ThreadedTableMatches) {
  StructureTable a = structure_constants(catalogue_generators(2), 1);
  StructureTable b = structure_constants(catalogue_generators(2), 3);
  EXPECT_EQ(a.c, b.c);
}

TEST(Structure, CombinationRendering) {
  std::vector<Expr> coeffs{Expr(0), Expr(2), Expr(Rational(-1, 2))};
  EXPECT_EQ(combination_str(coeffs), "2*X2 - X3/2");
}

}  // namespace
}  // namespace lieforge
