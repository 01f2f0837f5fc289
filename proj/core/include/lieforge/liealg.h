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

#include "lieforge/symmetry.h"

namespace lieforge {

/// [X, Y]^i = X(Y^i) - Y(X^i), componentwise.
VectorField lie_bracket(const VectorField& x, const VectorField& y);

/// [X_i, X_j] = sum_k c[i][j][k] X_k. Constants live in the field of rational
/// functions of the parameters (sqrt(c) and 1/c occur for reduced systems).
struct StructureTable {
  std::vector<VectorField> basis;
  std::vector<std::vector<std::vector<Expr>>> c;
  std::vector<std::vector<bool>> closed;
  /// Bracket of each pair (kept for non-closing pairs and for reports).
  std::vector<std::vector<VectorField>> brackets;

  [[nodiscard]] std::size_t dim() const { return basis.size(); }
  [[nodiscard]] bool is_closed() const;
  [[nodiscard]] bool is_antisymmetric() const;
};

/// Throws DomainError when the basis is linearly dependent.
StructureTable structure_constants(const std::vector<VectorField>& basis, int threads = 1);

/// Exact Jacobi identity on the constants of a closed table.
bool jacobi_check(const StructureTable& t);

struct AlgebraSignature {
  int dimension = 0;
  std::vector<int> derived_series;        // dims of g, g', g'', ... until stable
  std::vector<int> lower_central_series;  // dims of g, [g,g], [g,[g,g]], ...
  int center = 0;
  bool abelian = false;
  bool nilpotent = false;
  bool solvable = false;
  /// Largest k with g = h + kA_1 as a direct sum: dim Z - dim(Z ∩ [g,g]).
  int abelian_summand = 0;
};

AlgebraSignature algebra_signature(const StructureTable& t);

/// One entry of a catalogue bracket table, 1-based: [X_i, X_j] = sum value.
struct CatalogueBracket {
  int i = 0;
  int j = 0;
  std::vector<std::pair<int, Expr>> value;
};

/// Catalogue bracket tables: "a" (member 2), "b" (member 3), "f" (reduced
/// member 3). Pairs not listed are stated to commute.
std::vector<CatalogueBracket> catalogue_brackets(const std::string& family);

struct BracketDisagreement {
  int i = 0;
  int j = 0;
  std::vector<Expr> computed;   // length dim; empty when the pair does not close
  std::vector<Expr> catalogue;  // length dim
};

/// Pairs i < j where the computed constants differ from the catalogue table.
std::vector<BracketDisagreement> compare_with_catalogue(
    const StructureTable& t, const std::vector<CatalogueBracket>& table);

/// "2*X5 - X4/2" style rendering of a coefficient vector (1-based names).
std::string combination_str(const std::vector<Expr>& coeffs, const std::string& prefix = "X");

}  // namespace lieforge
