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

#include <cmath>
#include <numbers>

#include "lieforge/eval.h"
#include "lieforge/expr.h"
#include "lieforge/jet.h"
#include "lieforge/linalg.h"
#include "lieforge/parse.h"
#include "lieforge/special_functions.h"
#include "random_expr.h"

namespace lieforge {
namespace {

const JetSpec kSpec = real_pde_spec({"c"});

Expr P(const char* text) { return parse_expr(text, kSpec); }

TEST(Parse, RoundTripsSimpleForms) {
  for (const char* text : {"v_x*w", "-v_x^2 + w_x^2 + w_xx", "exp(-w)*cos(v)", "c/2 - t",
                           "I*v_xxx", "sin(t/2 + x/3)"}) {
    Expr e = P(text);
    EXPECT_EQ(P(e.str().c_str()), e) << text;
  }
}

TEST(Parse, AcceptsBothDerivativeSpellings) {
  JetSpec ode = ode_spec({"f", "g"}, {"c"});
  EXPECT_EQ(parse_expr("f''", ode), parse_expr("f_ss", ode));
}

TEST(Parse, RejectsBadInput) {
  EXPECT_THROW(P("v_x +"), ParseError);
  EXPECT_THROW(P("q_x"), UnknownIdentifierError);
  EXPECT_THROW(P("sin(v_x*w)"), ArgumentClassError);
}

TEST(Canonical, SumsAndProductsCommute) {
  EXPECT_EQ(P("v*w + t"), P("t + w*v"));
  EXPECT_EQ(P("(v + 1)^2"), P("v^2 + 2*v + 1"));
  EXPECT_TRUE((P("t*x") - P("x*t")).is_zero());
}

TEST(Canonical, TrigAndExpIdentities) {
  EXPECT_EQ(equals_zero(P("sin(v)^2 + cos(v)^2 - 1")), ZeroStatus::kZero);
  EXPECT_EQ(equals_zero(P("exp(w)*exp(-w) - 1")), ZeroStatus::kZero);
  EXPECT_EQ(equals_zero(P("sin(2*v) - 2*sin(v)*cos(v)")), ZeroStatus::kZero);
  EXPECT_NE(equals_zero(P("tan(v)*cos(v) - sin(v)")), ZeroStatus::kNonzero);
  EXPECT_EQ(equals_zero(P("sin(v) - cos(v)")), ZeroStatus::kNonzero);
}

TEST(Derive, MatchesCentralDifferences) {
  testing::RandomExprGen gen(7);
  const AtomRef t = symbol_atom("t");
  int compared = 0;
  for (int i = 0; i < 100; ++i) {
    Expr e = gen.expr(3);
    Expr de = derive(e, t);
    Point p = random_point(e * symbol("t"), gen.rng());
    const double h = 1e-5;
    try {
      Point plus = p, minus = p;
      plus[t] += h;
      minus[t] -= h;
      Complex fd = (eval_numeric(e, plus) - eval_numeric(e, minus)) / (2 * h);
      Complex exact = eval_numeric(de, p);
      EXPECT_NEAR(std::abs(fd - exact), 0.0, 1e-5 * (1 + std::abs(exact))) << e.str();
      ++compared;
    } catch (const PoleError&) {
    }
  }
  EXPECT_GT(compared, 80);
}

TEST(Substitute, IsSimultaneous) {
  Expr e = P("t*x");
  Expr r = substitute(e, {{symbol_atom("t"), P("x^2")}, {symbol_atom("x"), P("v")}});
  EXPECT_EQ(r, P("x^2*v"));
  EXPECT_THROW(substitute(e, {{symbol_atom("t"), symbol("x")}, {symbol_atom("x"), symbol("t")}}),
               CyclicBindingError);
}

TEST(Collect, ReconstructsTheExpression) {
  Expr e = P("c*v_x^2 + 3*v_x*w_x - c^2*w_x + t");
  auto classes = collect_by(e, [](AtomRef a) { return a->kind == AtomKind::kJet; });
  Expr back;
  for (const auto& [mono, coef] : classes) back += Expr::from_monomial(mono, Rational(1)) * coef;
  EXPECT_EQ(back, e);
  EXPECT_EQ(classes.size(), 4u);
}

TEST(Polynomial, DividesExactly) {
  auto [q, r] = divide_polynomial(P("t^3 - 1"), P("t - 1"), symbol_atom("t"));
  EXPECT_EQ(q, P("t^2 + t + 1"));
  EXPECT_TRUE(r.is_zero());
  auto [q2, r2] = divide_polynomial(P("t^2 + 1"), P("t + 1"), symbol_atom("t"));
  EXPECT_EQ(r2, Expr(2));
}

TEST(Polynomial, CancelsInverses) {
  Expr den = P("t + 1");
  Expr e = P("t^2 - 1") * reciprocal(den);
  EXPECT_EQ(cancel_inverse(e, den), P("t - 1"));
}

TEST(Eval, ReportsPoles) {
  Expr e = reciprocal(P("t - 1"));
  Point p{{symbol_atom("t"), 1.0}};
  EXPECT_THROW(eval_numeric(e, p), PoleError);
  p[symbol_atom("t")] = 3.0;
  EXPECT_NEAR(eval_numeric(e, p).real(), 0.5, 1e-15);
}

TEST(Eval, SquareRootOfParameters) {
  JetSpec ode = ode_spec({"f"}, {"c"});
  Expr e = parse_expr("sqrt(c)^2 - c", ode);
  EXPECT_TRUE(e.is_zero());
  Point p{{symbol_atom("c"), 4.0}};
  EXPECT_NEAR(eval_numeric(parse_expr("sqrt(c)", ode), p).real(), 2.0, 1e-15);
}

TEST(EqualsZero, SeedIsReproducible) {
  Expr e = P("tan(v)*cos(v) - sin(v) + exp(t)*0");
  ZeroTestOptions a;
  ZeroTestOptions b;
  b.seed = 7;
  EXPECT_EQ(equals_zero(e, a), equals_zero(e, b));
  EXPECT_EQ(default_seed(), a.seed);
}

TEST(Linalg, NullspaceOfKnownMatrix) {
  // Rows of [[1,2,3],[2,4,6],[1,0,1]]: rank 2, kernel spanned by (-1,-1,1).
  std::vector<RationalVector> rows{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  EXPECT_EQ(rank_of(rows, 3), 2);
  auto ns = nullspace(rows, 3);
  ASSERT_EQ(ns.size(), 1u);
  for (const auto& r : rows) {
    Rational dot = 0;
    for (int j = 0; j < 3; ++j) dot += r[j] * ns[0][j];
    EXPECT_EQ(dot, 0);
  }
}

TEST(Linalg, EchelonBuilderMatchesBatchRank) {
  EchelonBuilder b(3);
  EXPECT_TRUE(b.add_row({1, 2, 3}));
  EXPECT_FALSE(b.add_row({2, 4, 6}));
  EXPECT_TRUE(b.add_row({1, 0, 1}));
  EXPECT_EQ(b.rank(), 2);
  EXPECT_EQ(b.nullspace().size(), 1u);
}

TEST(Jacobi, SatisfiesIdentities) {
  for (double k : {0.0, 0.3, 0.9, 0.99}) {
    for (double u = -3.0; u <= 3.0; u += 0.37) {
      auto j = numeric::jacobi_elliptic(u, k);
      EXPECT_NEAR(j.sn * j.sn + j.cn * j.cn, 1.0, 1e-13);
      EXPECT_NEAR(j.dn * j.dn + k * k * j.sn * j.sn, 1.0, 1e-13);
    }
  }
  EXPECT_NEAR(numeric::jacobi_elliptic(0.7, 0.0).sn, std::sin(0.7), 1e-14);
  EXPECT_NEAR(numeric::elliptic_k(0.0), std::numbers::pi / 2, 1e-14);
  EXPECT_NEAR(numeric::jacobi_elliptic(numeric::elliptic_k(0.8), 0.8).sn, 1.0, 1e-12);
}

TEST(Properties, RandomSuiteHasNoFailures) {
  auto tally = testing::run_property_suite(200, 11);
  EXPECT_EQ(tally.failures(), 0) << tally.first_failure;
}

}  // namespace
}  // namespace lieforge
