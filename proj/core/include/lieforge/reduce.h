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

#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lieforge/eval.h"
#include "lieforge/symmetry.h"

namespace lieforge {

// ---- similarity reduction -------------------------------------------------------

/// Zeroth-order invariants of a translation generator with constant
/// coefficients: u^A = f^A(s) + shift^A * along.
struct SimilarityMap {
  Expr s;                              // e.g. x - c*t
  std::string along;                   // coordinate multiplying the shifts
  std::map<std::string, Expr> shift;   // per dependent; zero entries omitted
};

SimilarityMap invariants_of_translation(const VectorField& x);

struct Reduction {
  ODESystem system;
  /// Parameter expressions divided out of an equation; assumed nonzero.
  std::vector<Expr> assumptions;
};

/// Travelling-wave reduction along d_t + c d_x: v = f(s), w = g(s) with
/// s = x - c t. Each equation is written Phi^A - u^A_t = 0. An equation whose
/// jet content is a single monomial has its parameter factor removed and
/// recorded in the assumptions.
Reduction travelling_wave_reduce(const PDESystem& s, const Expr& c,
                                 const std::vector<std::string>& names = {"f", "g"});

/// Renames f' -> F, g' -> G (first letter upper-cased) and drops one order.
/// Throws DomainError if an undifferentiated dependent occurs.
ODESystem order_reduce(const ODESystem& s);

/// Catalogue ODE systems: "3.2", "3.3", "3.20", "3.22", "3.47".
ODESystem catalogue_ode(const std::string& name);

/// Catalogue second-order equation for F.
Expr catalogue_second_order();

/// Clears inverse atoms by multiplying through with their bases.
Expr clear_denominators(const Expr& e);

/// True when a = q b for a nonzero rational q, after clearing denominators.
bool proportional(const Expr& a, const Expr& b);

/// Equation-wise proportionality of two systems in the same order.
bool equivalent_systems(const ODESystem& a, const ODESystem& b);

struct Elimination {
  Expr g_expression;  // G in terms of F
  Expr equation;      // second-order equation in F, denominators cleared
};

/// Solves the equation that is linear in G without G' for G, substitutes
/// into the other. Throws DegeneratePivotError when the coefficient of G
/// vanishes identically.
Elimination eliminate_to_second_order(const ODESystem& s);

// ---- closed-form solutions ---------------------------------------------------

struct SolutionCandidate {
  std::string name;
  std::map<std::string, Expr> values;   // dependent -> expression in s
  std::vector<Expr> constraints;        // parameter relations, each = 0
  /// Indices of equations the candidate is checked against (empty: all).
  std::vector<std::size_t> equations;
  std::vector<std::string> notes;
};

/// Parameters bound to numbers for numeric checks.
using Bindings = std::map<std::string, Complex>;

/// F = c/2, G = -(c/2) tan((c/2)(s - s0)) for the first-order pair.
SolutionCandidate tan_solution();
/// Closed form with parameters F0, F1; G = -F'/(2F - c).
SolutionCandidate s11_solution();
/// F = 0 and the rational-trigonometric G with parameters G0, G1.
SolutionCandidate rational_trig_solution();
/// F = F0 sn(s, k), G = 0 with c = -(1 + k^2) and F0^2 = 2k^2; checked
/// against the F-equation.
SolutionCandidate sn_solution();
/// g = g0, f = f1 s + f0 with f1 (f1^3 + c) = 0.
SolutionCandidate linear_solution();

enum class VerifyMode { kSymbolic, kNumeric };

struct NumericOptions {
  Bindings params;
  double s_min = 0.0;
  double s_max = 4.0;
  int samples = 200;
  double tolerance = 1e-9;
  /// Samples where a candidate value exceeds this magnitude are treated as
  /// lying on a pole.
  double pole_guard = 1e6;
};

struct SolutionReport {
  std::string candidate;
  VerifyMode mode = VerifyMode::kSymbolic;
  std::vector<Expr> residuals;        // per checked equation
  ZeroStatus status = ZeroStatus::kZero;
  std::vector<double> max_abs;        // numeric mode, per checked equation
  int samples = 0;
  bool pass = false;
  /// Residuals of equations not in the checked set (reported, not judged).
  std::vector<Expr> unchecked;
};

/// Substitutes the candidate into every equation, reducing modulo its
/// constraints. Numeric mode evaluates on a uniform grid, skipping poles.
SolutionReport verify_solution(const ODESystem& s, const SolutionCandidate& cand, VerifyMode mode,
                               const NumericOptions& options = {});

/// Residual expressions of the candidate on s (no constraint reduction).
std::vector<Expr> solution_residuals(const ODESystem& s, const SolutionCandidate& cand);

/// Value of a candidate component bound to numbers.
Complex eval_candidate(const Expr& e, double s, const Bindings& params);

// ---- numerics -------------------------------------------------------------------

/// Jacobi sn; DomainError unless 0 <= k < 1.
double jacobi_sn(double u, double k);

struct Trajectory {
  std::vector<double> s;
  std::map<std::string, std::vector<Complex>> values;  // per dependent
  double h = 0.0;
  std::string method = "rk4";
  /// Set when the pole guard stopped the integration.
  bool hit_pole = false;
};

/// Classical RK4 on the explicit form of s (each equation solved for its
/// highest derivative). init maps every state coordinate (e.g. "F", "F'")
/// to its value at s_begin.
Trajectory integrate_rk4(const ODESystem& s, const std::map<std::string, Complex>& init,
                         double s_begin, double s_end, double h, const Bindings& params,
                         double guard = 1e8);

/// Antiderivative of an s-expression, vanishing at s = 0 unless a closed form
/// is recognized (constants, a*tan(b s + d) -> -(a/b) log|cos(b s + d)|);
/// other integrands use adaptive quadrature to 1e-10.
struct Antiderivative {
  std::function<Complex(double)> eval;
  bool closed_form = false;
  std::string description;
};

Antiderivative antiderivative(const Expr& integrand, const Bindings& params);

/// Lifted profiles f(s), g(s) of a travelling wave.
struct LiftedProfiles {
  std::map<std::string, std::function<Complex(double)>> profiles;  // per dependent
};

struct LiftGrid {
  double t_min = 0.0, t_max = 1.0;
  double x_min = 0.0, x_max = 1.0;
  int nt = 50, nx = 50;
  double fd_step = 1e-2;
};

/// Max |u_t - Phi| over the grid for u^A(t, x) = profile^A(x - c t), with
/// derivatives from sixth-order central differences.
double lift_and_check(const PDESystem& pde, const LiftedProfiles& lifted, double c,
                      const LiftGrid& grid = {}, const Bindings& params = {});

/// Profiles of the tan branch: f = c s/2, g = log|cos((c/2)(s - s0))|.
LiftedProfiles tan_branch_profiles(double c, double s0);

// ---- series output --------------------------------------------------------------

struct SeriesRow {
  double s;
  Complex F;
  Complex G;
};

/// Columns s,F_re,F_im,G_re,G_im with 17 significant digits.
void emit_series_csv(const std::vector<SeriesRow>& rows, const std::string& path);

/// Rows of a first-order trajectory with dependents F and G.
std::vector<SeriesRow> series_from_trajectory(const Trajectory& t);

/// Samples a closed-form candidate on a uniform grid of `points` points.
std::vector<SeriesRow> sample_candidate(const SolutionCandidate& cand, const Bindings& params,
                                        double s_min, double s_max, int points);

struct Fig1Series {
  double f1 = 0.0;
  std::string path;
  std::vector<SeriesRow> rows;
};

/// Samples the closed form over two periods 2*pi/c (points per series,
/// odd so that s + period is a grid point) and writes one CSV per F1 value:
/// "<stem>_F1_<value>.csv" next to `path`.
std::vector<Fig1Series> fig1(double c, double f0, const std::vector<double>& f1_values,
                             const std::string& path, int points = 2001);

/// Sign changes of the discrete derivative of Re F over the first period.
int derivative_sign_changes(const std::vector<SeriesRow>& rows, double period);

/// Max |Re F(s + period) - Re F(s)| and likewise for G over the first period.
double periodicity_defect(const std::vector<SeriesRow>& rows, double period);

}  // namespace lieforge
