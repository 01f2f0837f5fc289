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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lieforge/eval.h"
#include "lieforge/linalg.h"
#include "lieforge/system.h"

namespace lieforge {

/// X = sum_i xi^i d_i + sum_A eta^A d_{u^A}. Coefficients depend on the
/// independents, undifferentiated dependents, parameters and, for infinite
/// families, unknown functions whose constraints are given in evolution form.
struct VectorField {
  JetSpec jet;
  std::map<std::string, Expr> xi;
  std::map<std::string, Expr> eta;
  std::vector<PrincipalRule> constraints;
  std::string label;

  [[nodiscard]] Expr xi_of(const std::string& var) const;
  [[nodiscard]] Expr eta_of(const std::string& dep) const;
  /// Components in the order independents then dependents.
  [[nodiscard]] std::vector<std::pair<std::string, Expr>> components() const;
  /// Coefficient of d/d(name) where name is an independent or dependent.
  [[nodiscard]] Expr component(const std::string& name) const;
  [[nodiscard]] bool is_zero() const;
  /// "(t^2)*d_t + (t*x)*d_x + ..." with zero components omitted.
  [[nodiscard]] std::string str() const;

  /// Throws DomainError if a coefficient contains derivative coordinates.
  void check() const;
};

/// Builds a field from component strings (expression grammar) keyed by
/// variable name.
VectorField make_field(const JetSpec& jet, const std::map<std::string, std::string>& components,
                       std::string label = {});

VectorField operator+(const VectorField& a, const VectorField& b);
VectorField operator*(const Expr& k, const VectorField& a);
bool operator==(const VectorField& a, const VectorField& b);

/// Action of X as a first-order operator on a coefficient function.
Expr apply_field(const VectorField& x, const Expr& f);

/// Raw extended coefficients eta^{A,J} for every derivative multi-index of
/// order 1..n over the independents (no normal-form reduction).
std::map<AtomRef, Expr> prolong_generator(const VectorField& x, int order);

/// Extended coefficient eta^{A,J} via the recursion
///   eta^{A,Ji} = D_i eta^{A,J} - sum_j (D_i xi^j) u^A_{Jj},
/// each step reduced to normal form when a normalizer is supplied.
class Prolongation {
 public:
  Prolongation(const VectorField& x, Normalizer* nf);
  Expr coefficient(AtomRef jet_atom);

 private:
  const VectorField& x_;
  Normalizer* nf_;
  std::map<AtomRef, Expr> memo_;
};

/// X^{[n]}(u_lead - Phi) for each equation, with every principal derivative
/// (and derivatives of constrained unknown functions) reduced to normal form.
std::vector<Expr> symmetry_residual(const SolvedSystem& s, const VectorField& x);
std::vector<Expr> symmetry_residual(const PDESystem& s, const VectorField& x);

struct VerificationReport {
  std::string label;
  ZeroStatus status = ZeroStatus::kZero;
  std::vector<Expr> remainders;

  [[nodiscard]] bool is_zero() const { return status != ZeroStatus::kNonzero; }
};

VerificationReport verify_generator(const SolvedSystem& s, const VectorField& x);
VerificationReport verify_generator(const PDESystem& s, const VectorField& x);

// ---- ansatz-based discovery ---------------------------------------------------

struct AnsatzOptions {
  int degree = 2;  // t^a x^b with a + b <= degree on every slot
  int trig = 0;    // {1, sin(m v), cos(m v) : m <= trig} on dependent slots
  int expw = 0;    // {e^{k w} : |k| <= expw} on dependent slots
  /// Also multiply the independent slots by the trig/exp dictionary.
  bool functional_xi = false;
};

struct AnsatzColumn {
  std::string slot;
  Expr basis;
};

struct AnsatzBasis {
  JetSpec jet;
  std::vector<AnsatzColumn> columns;

  [[nodiscard]] std::size_t size() const { return columns.size(); }
};

/// Dictionary basis; the trig variable is the first dependent and the
/// exponential variable the second.
AnsatzBasis make_ansatz(const JetSpec& jet, const AnsatzOptions& options);

struct DeterminingRow {
  std::size_t equation;
  Monomial monomial;
  std::map<int, Rational> entries;
};

/// Homogeneous linear system in the ansatz coefficients, one row per
/// (equation, monomial) class of the residual.
struct DeterminingSystem {
  std::vector<std::string> unknown_labels;
  std::vector<DeterminingRow> rows;

  [[nodiscard]] int cols() const { return static_cast<int>(unknown_labels.size()); }
  [[nodiscard]] int rank() const;
  [[nodiscard]] std::vector<RationalVector> nullspace() const;
};

DeterminingSystem determining_system(const SolvedSystem& s, const AnsatzBasis& b, int threads = 1);

struct DiscoveryResult {
  std::vector<VectorField> basis;
  std::size_t rows = 0;
  int rank = 0;
  double seconds = 0.0;
};

/// Nullspace of the determining system mapped back to fields, in reduced row
/// echelon order over the ansatz columns.
DiscoveryResult discover_symmetries(const SolvedSystem& s, const AnsatzBasis& b, int threads = 1);
DiscoveryResult discover_symmetries(const PDESystem& s, const AnsatzBasis& b, int threads = 1);

/// Coordinates of a field over (component, functional monomial) pairs. A
/// functional monomial is the part of a monomial free of parameter symbols
/// and their roots; the parameter part goes into the coordinate value.
std::map<std::pair<std::string, Monomial>, Expr> field_coordinates(const VectorField& x);

/// Exact coefficients expressing x in span(basis) over the field of rational
/// functions of the parameters, or nullopt.
std::optional<std::vector<Expr>> span_membership(const VectorField& x,
                                                 const std::vector<VectorField>& basis);

/// Rank of a family of fields over the same field.
int field_rank(const std::vector<VectorField>& fields);

// ---- catalogue generators ----------------------------------------------------

/// Jet space of the travelling-wave systems: s; f, g; parameter c.
JetSpec reduced_spec();

/// Catalogue generators: member 2 (Γ_1a..Γ_7a), member 3 (Γ_1b..Γ_7b),
/// member 4 (Γ_1c..Γ_4c).
std::vector<VectorField> catalogue_generators(int member);

/// Corrected scaling generator of member 3, t d_t + (x/3) d_x.
VectorField member3_scaling();

/// Infinite families with their constraint equations: member 2 (a, b with
/// a_t = a_xx) and member 3 (c, d with c_t = c_xxx). With drop_constraint the
/// second unknown is left unconstrained (negative control).
VectorField infinite_family(int member, bool drop_constraint = false);

/// Member-2 family with the coupled constraints a_t = b_xx, b_t = -a_xx: the
/// real and imaginary parts of chi_t = -i chi_xx, the linear equation that
/// psi = exp(-i u) satisfies.
VectorField coupled_member2_family();

/// Reduced-system generators: "d" (twelve fields on the second-order
/// travelling-wave system of member 2), "f" (five fields on that of
/// member 3), "j" (three fields on that of member 4).
std::vector<VectorField> catalogue_reduced_generators(const std::string& family);

/// Γ_7d and Γ_12d with sin(f + c s) replaced by sin(f - c s) in the
/// offending components.
std::vector<VectorField> corrected_reduced_generators();

}  // namespace lieforge
