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
#include <vector>

#include "lieforge/expr.h"
#include "lieforge/rational.h"

namespace lieforge {

using RationalVector = std::vector<Rational>;

/// Incremental fraction-free row echelon form over the integers. Rows are
/// scaled to primitive integer vectors on insertion and reduced against the
/// current pivots, so memory stays bounded by the rank rather than the number
/// of rows fed in.
class EchelonBuilder {
 public:
  explicit EchelonBuilder(int cols) : cols_(cols) {}

  /// Reduces `row` against the current basis; returns true if it increased
  /// the rank.
  bool add_row(const RationalVector& row);
  bool add_sparse_row(const std::map<int, Rational>& row);

  [[nodiscard]] int cols() const { return cols_; }
  [[nodiscard]] int rank() const { return static_cast<int>(rows_.size()); }

  /// Reduced row echelon form with unit pivots, rows ordered by pivot column.
  [[nodiscard]] std::vector<RationalVector> rref() const;
  [[nodiscard]] std::vector<int> pivots() const;

  /// Canonical nullspace basis: one vector per free column, the set brought
  /// to reduced row echelon form (pivot on the lowest index, pivots 1).
  [[nodiscard]] std::vector<RationalVector> nullspace() const;

 private:
  void reduce(std::vector<Integer>& row) const;

  int cols_;
  // Pivot column -> primitive integer row with positive pivot entry.
  std::map<int, std::vector<Integer>> rows_;
};

/// RREF of a rational matrix (rows), pivoting on the lowest column.
std::vector<RationalVector> rref(const std::vector<RationalVector>& rows, int cols);

int rank_of(const std::vector<RationalVector>& rows, int cols);

std::vector<RationalVector> nullspace(const std::vector<RationalVector>& rows, int cols);

/// Solves sum_j x_j * columns[j] = target exactly; nullopt when inconsistent.
/// Free variables are set to zero.
std::optional<RationalVector> solve_columns(const std::vector<RationalVector>& columns,
                                            const RationalVector& target);

/// Linear solve over the field of rational functions in parameter symbols.
/// Entries are expressions free of coordinates other than parameters;
/// pivots are chosen preferring monomials so inverses stay closed-form.
/// Returns nullopt when inconsistent.
std::optional<std::vector<Expr>> solve_symbolic(const std::vector<std::vector<Expr>>& columns,
                                                const std::vector<Expr>& target);

/// Rank over the same field.
int rank_symbolic(const std::vector<std::vector<Expr>>& rows);

}  // namespace lieforge
