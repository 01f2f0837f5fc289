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
#include <utility>
#include <vector>

#include "lieforge/system.h"

namespace lieforge {

/// Complex Burgers hierarchy u_t = L^n P(i u_x e^{-i(u - ubar)}) over the
/// complex jet space (u, ubar).
///
///   P(beta) = i e^{i(u - ubar)} beta
///   L(tau)  = i D_x tau + u_x tau
Expr apply_operator_P(const Expr& beta);
Expr apply_operator_L(const Expr& tau);

inline constexpr int kDefaultMaxMember = 6;

/// Complex right-hand side of the member with t(L) = L^n.
Expr hierarchy_member(int n, int max_n = kDefaultMaxMember);

/// Substitutes u = v + i w, ubar = v - i w in every jet coordinate and
/// returns the real and imaginary parts.
std::pair<Expr, Expr> complex_split(const Expr& rhs);

/// Real/imaginary evolution system from a complex right-hand side.
PDESystem split_system(const Expr& complex_rhs, std::string label);

/// Catalogue real systems of members 1..4, as published.
PDESystem catalogue_member(int k);

/// Catalogue complex right-hand side of member 4.
Expr catalogue_member4_complex();

struct AuditItem {
  std::string equation;  // "v" or "w"
  std::string monomial;
  Rational generated;
  Rational catalogue;
};

struct AuditReport {
  int k = 0;
  bool match = true;
  std::vector<Expr> generated;
  std::vector<Expr> catalogue;
  std::vector<Expr> delta;  // generated - catalogue, per equation
  std::vector<AuditItem> items;
};

/// Compares split(hierarchy_member(k - 1)) against catalogue_member(k).
AuditReport audit_member(int k);

}  // namespace lieforge
