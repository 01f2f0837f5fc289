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

#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "lieforge/expr.h"
#include "lieforge/jet.h"

namespace lieforge {

/// dependent_t = rhs
struct Equation {
  std::string dependent;
  Expr rhs;
};

/// Evolution-form system u^A_t = Phi^A over (t, x).
struct PDESystem {
  JetSpec jet;
  std::vector<Equation> equations;
  std::string label;

  /// u^A_t - Phi^A for equation i.
  [[nodiscard]] Expr residual_form(std::size_t i) const;
  /// Throws DomainError unless every rhs is free of t-derivatives and there
  /// is exactly one equation per dependent.
  void check_evolution_form() const;
};

/// ODE system in s, each equation written as expr = 0.
struct ODESystem {
  JetSpec jet;
  std::vector<Expr> equations;
  std::string label;

  [[nodiscard]] int order() const;
};

/// Highest derivative solved for: lead = phi, lead a jet or unknown atom.
struct PrincipalRule {
  AtomRef lead;
  Expr phi;
};

/// Rules for the leading derivatives of a system (and of any constraint
/// equations on unknown functions).
struct SolvedSystem {
  JetSpec jet;
  std::vector<PrincipalRule> rules;
};

SolvedSystem solved_form(const PDESystem& s);

/// Each equation is solved for its highest-order jet atom, which must occur
/// linearly with a nonzero rational coefficient and be distinct across
/// equations.
SolvedSystem solved_form(const ODESystem& s);

/// Highest-order jet atom of an ODE equation together with the rule
/// obtained by solving for it.
PrincipalRule solve_for_leading(const Expr& equation);

/// True when the multiset `sub` is contained in `super` (both sorted).
bool multiset_contains(std::string_view super, std::string_view sub);

/// Reduction to normal form modulo a solved system: every derivative of a
/// principal atom is replaced by the corresponding differential consequence
/// of its rule. Results are memoized per instance (not thread-safe; use one
/// instance per thread).
class Normalizer {
 public:
  explicit Normalizer(std::vector<PrincipalRule> rules, int max_order = 16);

  [[nodiscard]] bool is_principal(AtomRef a) const;
  /// Normal form of a single atom (itself if not principal).
  Expr of(AtomRef a);
  Expr normalize(const Expr& e);
  /// NF(D_var(e)) for e already in normal form.
  Expr derive_normalized(const Expr& e, char var);

 private:
  const PrincipalRule* rule_for(AtomRef a) const;

  std::vector<PrincipalRule> rules_;
  int max_order_;
  std::unordered_map<AtomRef, Expr> memo_;
  std::unordered_set<AtomRef> pending_;
};

}  // namespace lieforge
