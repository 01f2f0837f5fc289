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
#include <filesystem>
#include <fstream>
#include <numbers>

#include "lieforge/hierarchy.h"
#include "lieforge/parse.h"
#include "lieforge/reduce.h"
#include "lieforge/special_functions.h"

namespace lieforge {
namespace {

const Expr kC = symbol("c");

ODESystem derived_first_order() {
  return order_reduce(travelling_wave_reduce(catalogue_member(2), kC).system);
}

TEST(Travelling, Member1NeedsSpeedOtherThanOne) {
  Reduction r = travelling_wave_reduce(catalogue_member(1), kC);
  ASSERT_EQ(r.assumptions.size(), 1u);
  EXPECT_EQ(r.assumptions[0], parse_expr("c - 1", ode_spec({}, {"c"})));
}

TEST(Travelling, Member2AndMember3) {
  EXPECT_TRUE(equivalent_systems(travelling_wave_reduce(catalogue_member(2), kC).system,
                                 catalogue_ode("3.2")));
  EXPECT_TRUE(equivalent_systems(travelling_wave_reduce(catalogue_member(3), kC).system,
                                 catalogue_ode("3.20")));
}

TEST(Travelling, InvariantsOfTranslation) {
  VectorField x = make_field(real_pde_spec({"c"}), {{"t", "1"}, {"x", "c"}});
  SimilarityMap m = invariants_of_translation(x);
  EXPECT_EQ(m.s, parse_expr("x - c*t", real_pde_spec({"c"})));
  EXPECT_TRUE(m.shift.empty());
}

TEST(OrderReduce, Member2) {
  EXPECT_TRUE(equivalent_systems(derived_first_order(), catalogue_ode("3.3")));
  EXPECT_THROW(order_reduce(catalogue_ode("3.3")), DomainError);
}

TEST(Proportional, UpToRationalFactor) {
  JetSpec spec = ode_spec({"F"}, {"c"});
  Expr a = parse_expr("2*F'' - 4*F^2 + c", spec);
  EXPECT_TRUE(proportional(a, parse_expr("-F'' + 2*F^2 - c/2", spec)));
  EXPECT_FALSE(proportional(a, parse_expr("F'' + 2*F^2 - c/2", spec)));
  Expr with_den = parse_expr("F'' + F'^2/(2*F - c)", spec);
  EXPECT_TRUE(proportional(with_den, parse_expr("(2*F - c)*F'' + F'^2", spec)));
}

// Ermakov-Pinney oracle: with y^2 = A cos^2(cs/2) + B sin^2(cs/2) + 2C sin cos and
// AB - C^2 = 1/c^2, F = (c + 1/y^2)/2 solves the eliminated equation.
TEST(Elimination, ErmakovPinneyOracle) {
  Elimination el = eliminate_to_second_order(derived_first_order());
  JetSpec spec = ode_spec({"F", "G"}, {"c", "A", "B", "C"});
  Expr y2 = parse_expr("A*cos(c*s/2)^2 + B*sin(c*s/2)^2 + 2*C*sin(c*s/2)*cos(c*s/2)", spec);
  SolutionCandidate cand;
  cand.name = "oracle";
  cand.values["F"] = parse_expr("c/2", spec) + parse_expr("1/2", spec) * reciprocal(y2);
  cand.values["G"] = Expr();
  ODESystem eq{spec, {el.equation}, "eliminated"};
  NumericOptions opt;
  const double c = 1.3, a = 0.8, b = 1.1;
  const double cc = std::sqrt(a * b - 1.0 / (c * c));
  opt.params = {{"c", c}, {"A", a}, {"B", b}, {"C", cc}};
  SolutionReport r = verify_solution(eq, cand, VerifyMode::kNumeric, opt);
  EXPECT_TRUE(r.pass) << r.max_abs[0];
  // Perturbing the invariant breaks it.
  opt.params["C"] = cc + 0.1;
  EXPECT_FALSE(verify_solution(eq, cand, VerifyMode::kNumeric, opt).pass);
}

TEST(Elimination, CatalogueEquationDiffers) {
  Elimination el = eliminate_to_second_order(derived_first_order());
  EXPECT_FALSE(proportional(el.equation, catalogue_second_order()));
}

TEST(Elimination, DegeneratePivot) {
  ODESystem s = catalogue_ode("3.3");
  AtomRef f = jet_atom("F"), fp = jet_atom("F", "s");
  for (Expr& e : s.equations) e = substitute(e, {{f, parse_expr("c/2", s.jet)}, {fp, Expr()}});
  EXPECT_THROW(eliminate_to_second_order(s), DegeneratePivotError);
}

TEST(Solutions, TanAndLinearAreExact) {
  EXPECT_EQ(verify_solution(catalogue_ode("3.3"), tan_solution(), VerifyMode::kSymbolic).status,
            ZeroStatus::kZero);
  SolutionReport lin = verify_solution(catalogue_ode("3.47"), linear_solution(), VerifyMode::kSymbolic);
  EXPECT_EQ(lin.status, ZeroStatus::kZero);
  SolutionCandidate free = linear_solution();
  free.constraints.clear();
  EXPECT_EQ(verify_solution(catalogue_ode("3.47"), free, VerifyMode::kSymbolic).status,
            ZeroStatus::kNonzero);
}

TEST(Solutions, ClosedFormGSatisfiesTheSecondEquation) {
  // G = -F'/(2F - c) makes the F-equation hold whatever F is.
  for (double f1 : {0.0, 1.0, 2.0}) {
    NumericOptions opt;
    opt.params = {{"c", 1.0}, {"F0", 1.0}, {"F1", f1}};
    SolutionReport r = verify_solution(catalogue_ode("3.3"), s11_solution(), VerifyMode::kNumeric, opt);
    ASSERT_EQ(r.max_abs.size(), 2u);
    EXPECT_LT(r.max_abs[1], 1e-9);
    EXPECT_EQ(r.samples, 200);
  }
}

TEST(Solutions, SnBranch) {
  const double k = 0.9;
  NumericOptions opt;
  opt.params = {{"c", -(1 + k * k)}, {"F0", std::sqrt(2.0) * k}, {"k", k}};
  opt.tolerance = 1e-8;
  SolutionReport r = verify_solution(catalogue_ode("3.22"), sn_solution(), VerifyMode::kNumeric, opt);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.unchecked.size(), 1u);
  opt.params["c"] = -1.0;
  EXPECT_FALSE(verify_solution(catalogue_ode("3.22"), sn_solution(), VerifyMode::kNumeric, opt).pass);
}

TEST(Solutions, NegatedRationalTrigSolvesTheDerivedSystem) {
  ODESystem derived = order_reduce(travelling_wave_reduce(catalogue_member(3), kC).system);
  SolutionCandidate cand = rational_trig_solution();
  cand.values["G"] = -cand.values["G"];
  NumericOptions opt;
  opt.params = {{"c", 1.0}, {"G0", 0.5}, {"G1", 0.25}};
  EXPECT_TRUE(verify_solution(derived, cand, VerifyMode::kNumeric, opt).pass);
}

TEST(Numerics, JacobiSnIdentity) {
  const double k = 0.9;
  for (double u = -4; u <= 4; u += 0.1) {
    auto j = numeric::jacobi_elliptic(u, k);
    double lhs = j.cn * j.dn * j.cn * j.dn;
    double rhs = (1 - j.sn * j.sn) * (1 - k * k * j.sn * j.sn);
    EXPECT_NEAR(lhs, rhs, 1e-12);
    EXPECT_DOUBLE_EQ(jacobi_sn(u, k), j.sn);
  }
  EXPECT_THROW(jacobi_sn(0.1, 1.0), DomainError);
}

double rk4_error(double h) {
  Trajectory tr = integrate_rk4(catalogue_ode("3.3"), {{"F", 0.5}, {"G", 0.0}}, 0, 2, h, {{"c", 1.0}});
  double worst = 0;
  for (std::size_t i = 0; i < tr.s.size(); ++i) {
    worst = std::max(worst, std::abs(tr.values["G"][i] + 0.5 * std::tan(0.5 * tr.s[i])));
  }
  return worst;
}

TEST(Numerics, Rk4ConvergesAtFourthOrder) {
  EXPECT_LT(rk4_error(1e-3), 1e-6);
  double ratio = rk4_error(1e-2) / rk4_error(5e-3);
  EXPECT_GE(ratio, 12.0);
  EXPECT_LE(ratio, 20.0);
}

TEST(Numerics, Rk4StopsAtPole) {
  Trajectory tr = integrate_rk4(catalogue_ode("3.3"), {{"F", 0.5}, {"G", 0.0}}, 0, 4, 1e-3, {{"c", 1.0}});
  EXPECT_TRUE(tr.hit_pole);
  EXPECT_LT(tr.s.back(), 4.0);
  EXPECT_NEAR(tr.s.back(), std::numbers::pi, 0.05);
}

TEST(Numerics, SecondOrderSystemState) {
  auto init = std::map<std::string, Complex>{{"F", 0.1}, {"F'", 0.0}, {"G", 0.0}, {"G'", 0.0}};
  Trajectory tr = integrate_rk4(catalogue_ode("3.22"), init, 0, 1, 1e-2, {{"c", 1.0}});
  EXPECT_EQ(tr.values.size(), 4u);
  EXPECT_THROW(integrate_rk4(catalogue_ode("3.22"), {{"F", 0.1}}, 0, 1, 1e-2, {{"c", 1.0}}),
               DomainError);
}

TEST(Numerics, Antiderivatives) {
  JetSpec spec = ode_spec({"F"}, {"c"});
  Antiderivative tan_part = antiderivative(parse_expr("-(c/2)*tan(c*s/2)", spec), {{"c", 1.0}});
  EXPECT_TRUE(tan_part.closed_form);
  EXPECT_NEAR(tan_part.eval(1.0).real(), std::log(std::cos(0.5)), 1e-14);
  Antiderivative quad = antiderivative(parse_expr("c*sin(s)", spec), {{"c", 2.0}});
  EXPECT_FALSE(quad.closed_form);
  EXPECT_NEAR(quad.eval(1.5).real(), 2 * (1 - std::cos(1.5)), 1e-9);
}

TEST(Numerics, LiftedTanBranchSolvesMember2) {
  double r = lift_and_check(catalogue_member(2), tan_branch_profiles(1.0, 0.0), 1.0);
  EXPECT_LT(r, 1e-6);
  LiftedProfiles wrong = tan_branch_profiles(1.0, 0.0);
  wrong.profiles["v"] = [](double s) { return Complex(0.4 * s); };
  EXPECT_GT(lift_and_check(catalogue_member(2), wrong, 1.0), 1e-3);
}

TEST(Series, Fig1Files) {
  auto dir = std::filesystem::temp_directory_path() / "lieforge_fig1_test";
  std::filesystem::create_directories(dir);
  auto series = fig1(1.0, 1.0, {0, 2}, (dir / "fig1.csv").string(), 801);
  ASSERT_EQ(series.size(), 2u);
  const double period = 2 * std::numbers::pi;
  for (const Fig1Series& s : series) {
    std::ifstream in(s.path);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "s,F_re,F_im,G_re,G_im");
    EXPECT_LT(periodicity_defect(s.rows, period), 1e-6);
  }
  EXPECT_GT(derivative_sign_changes(series[1].rows, period),
            derivative_sign_changes(series[0].rows, period));
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace lieforge
