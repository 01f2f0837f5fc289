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

#include "lieforge/system.h"

#include <algorithm>
#include <set>

namespace lieforge {

Expr PDESystem::residual_form(std::size_t i) const {
  const Equation& eq = equations.at(i);
  return lieforge::jet(eq.dependent, "t") - eq.rhs;
}

void PDESystem::check_evolution_form() const {
  if (equations.size() != jet.dependents.size()) {
    throw DomainError(label + ": expected one equation per dependent variable");
  }
  std::set<std::string> seen;
  for (const Equation& eq : equations) {
    if (!jet.is_dependent(eq.dependent) || !seen.insert(eq.dependent).second) {
      throw DomainError(label + ": bad or repeated dependent '" + eq.dependent + "'");
    }
    for (AtomRef a : eq.rhs.atoms_deep()) {
      if ((a->kind == AtomKind::kJet || a->kind == AtomKind::kUnknown) &&
          a->derivs.find('t') != std::string::npos) {
        throw DomainError(label + ": right-hand side contains t-derivative " + to_string(a));
      }
    }
  }
}

int ODESystem::order() const {
  int n = 0;
  for (const Expr& e : equations) {
    for (AtomRef a : e.atoms_deep()) {
      if (a->kind == AtomKind::kJet) n = std::max(n, a->order());
    }
  }
  return n;
}

bool multiset_contains(std::string_view super, std::string_view sub) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

SolvedSystem solved_form(const PDESystem& s) {
  s.check_evolution_form();
  SolvedSystem out{s.jet, {}};
  for (const Equation& eq : s.equations) out.rules.push_back({jet_atom(eq.dependent, "t"), eq.rhs});
  return out;
}

PrincipalRule solve_for_leading(const Expr& equation) {
  AtomRef lead = nullptr;
  bool tie = false;
  for (AtomRef a : equation.atoms()) {
    if (a->kind != AtomKind::kJet && a->kind != AtomKind::kUnknown) continue;
    if (lead == nullptr || a->order() > lead->order()) {
      lead = a;
      tie = false;
    } else if (a->order() == lead->order()) {
      tie = true;
    }
  }
  if (lead == nullptr) throw DomainError("equation has no derivative to solve for: " + equation.str());
  if (tie) throw DomainError("ambiguous leading derivative in " + equation.str());
  auto coeffs = coefficients_in(equation, lead);
  if (coeffs.rbegin()->first != 1 || coeffs.begin()->first < 0) {
    throw DomainError("equation is not linear in " + to_string(lead) + ": " + equation.str());
  }
  auto c1 = coeffs.at(1).as_rational();
  if (!c1) throw DomainError("coefficient of " + to_string(lead) + " is not a rational number");
  Expr c0 = coeffs.count(0) ? coeffs.at(0) : Expr();
  return {lead, scale(c0, -Rational(1) / *c1)};
}

SolvedSystem solved_form(const ODESystem& s) {
  SolvedSystem out{s.jet, {}};
  std::set<std::string> dependents;
  for (const Expr& e : s.equations) {
    PrincipalRule r = solve_for_leading(e);
    if (!dependents.insert(r.lead->name).second) {
      throw DomainError(s.label + ": two equations lead in " + r.lead->name);
    }
    out.rules.push_back(std::move(r));
  }
  return out;
}

Normalizer::Normalizer(std::vector<PrincipalRule> rules, int max_order)
    : rules_(std::move(rules)), max_order_(max_order) {}

const PrincipalRule* Normalizer::rule_for(AtomRef a) const {
  if (a->kind != AtomKind::kJet && a->kind != AtomKind::kUnknown) return nullptr;
  for (const PrincipalRule& r : rules_) {
    if (r.lead->kind == a->kind && r.lead->name == a->name &&
        multiset_contains(a->derivs, r.lead->derivs)) {
      return &r;
    }
  }
  return nullptr;
}

bool Normalizer::is_principal(AtomRef a) const { return rule_for(a) != nullptr; }

Expr Normalizer::of(AtomRef a) {
  const PrincipalRule* r = rule_for(a);
  if (r == nullptr) return Expr::from_atom(a);
  auto it = memo_.find(a);
  if (it != memo_.end()) return it->second;
  if (pending_.count(a)) throw DerivativeError("cyclic principal rules through " + to_string(a));
  if (a->order() > max_order_) {
    throw DerivativeError("normal form of " + to_string(a) + " exceeds the order bound");
  }
  pending_.insert(a);
  Expr result;
  if (a == r->lead) {
    result = normalize(r->phi);
  } else {
    std::string rest = a->derivs;
    for (char ch : r->lead->derivs) rest.erase(rest.find(ch), 1);
    char var = rest.back();
    std::string parent_derivs = a->derivs;
    parent_derivs.erase(parent_derivs.rfind(var), 1);
    AtomRef parent = a->kind == AtomKind::kJet ? jet_atom(a->name, parent_derivs)
                                               : unknown_atom(a->name, parent_derivs);
    result = derive_normalized(of(parent), var);
  }
  pending_.erase(a);
  memo_.emplace(a, result);
  return result;
}

Expr Normalizer::normalize(const Expr& e) {
  bool any = false;
  for (AtomRef a : e.atoms_deep()) {
    if (is_principal(a)) {
      any = true;
      break;
    }
  }
  if (!any) return e;
  return substitute_with(e, [this](AtomRef a) -> std::optional<Expr> {
    if (!is_principal(a)) return std::nullopt;
    return of(a);
  });
}

Expr Normalizer::derive_normalized(const Expr& e, char var) {
  return normalize(total_derivative(e, var));
}

}  // namespace lieforge
