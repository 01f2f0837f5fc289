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
#include <vector>

#include "lieforge/expr.h"

namespace lieforge {

/// Variable conventions of a jet space. Independent variables are single
/// letters so that derivative multi-indices can be spelled as strings.
struct JetSpec {
  std::vector<std::string> independents;
  std::vector<std::string> dependents;
  std::vector<std::string> parameters;
  /// Arbitrary functions of the independents (a(t,x), ...).
  std::vector<std::string> unknowns;
  int max_order = 4;

  [[nodiscard]] bool is_independent(std::string_view n) const;
  [[nodiscard]] bool is_dependent(std::string_view n) const;
  [[nodiscard]] bool is_parameter(std::string_view n) const;
  [[nodiscard]] bool is_unknown(std::string_view n) const;
  [[nodiscard]] bool is_ode() const { return independents.size() == 1; }

  /// Atoms of the independents in declared order.
  [[nodiscard]] std::vector<AtomRef> independent_atoms() const;
  /// Undifferentiated dependent atoms in declared order.
  [[nodiscard]] std::vector<AtomRef> dependent_atoms() const;
};

/// Total derivative D_var: raises the multi-index of every jet and
/// unknown-function atom by `var` and differentiates the explicit dependence
/// on the independent symbol `var`.
Expr total_derivative(const Expr& e, char var);

/// (t, x) with dependents (v, w): the real split of the complex members.
JetSpec real_pde_spec(std::vector<std::string> parameters = {});
/// (t, x) with the complex pair (u, ubar).
JetSpec complex_pde_spec();
/// Single independent s with the given dependents.
JetSpec ode_spec(std::vector<std::string> dependents, std::vector<std::string> parameters = {});

}  // namespace lieforge
