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

#include "lieforge/jet.h"

#include <algorithm>

namespace lieforge {
namespace {

bool contains(const std::vector<std::string>& v, std::string_view n) {
  return std::find(v.begin(), v.end(), n) != v.end();
}

}  // namespace

bool JetSpec::is_independent(std::string_view n) const { return contains(independents, n); }
bool JetSpec::is_dependent(std::string_view n) const { return contains(dependents, n); }
bool JetSpec::is_parameter(std::string_view n) const { return contains(parameters, n); }
bool JetSpec::is_unknown(std::string_view n) const { return contains(unknowns, n); }

std::vector<AtomRef> JetSpec::independent_atoms() const {
  std::vector<AtomRef> out;
  for (const auto& n : independents) out.push_back(symbol_atom(n));
  return out;
}

std::vector<AtomRef> JetSpec::dependent_atoms() const {
  std::vector<AtomRef> out;
  for (const auto& n : dependents) out.push_back(jet_atom(n));
  return out;
}

Expr total_derivative(const Expr& e, char var) {
  AtomRef self = symbol_atom(std::string(1, var));
  return derivation(e, [&](AtomRef a) -> Expr {
    switch (a->kind) {
      case AtomKind::kJet:
      case AtomKind::kUnknown:
        return Expr::from_atom(extend_derivative(a, var));
      case AtomKind::kSymbol:
        return a == self ? Expr(1L) : Expr();
      default:
        return Expr();
    }
  });
}

JetSpec real_pde_spec(std::vector<std::string> parameters) {
  return JetSpec{{"t", "x"}, {"v", "w"}, std::move(parameters), {}, 4};
}

JetSpec complex_pde_spec() { return JetSpec{{"t", "x"}, {"u", "ubar"}, {}, {}, 8}; }

JetSpec ode_spec(std::vector<std::string> dependents, std::vector<std::string> parameters) {
  return JetSpec{{"s"}, std::move(dependents), std::move(parameters), {}, 4};
}

}  // namespace lieforge
