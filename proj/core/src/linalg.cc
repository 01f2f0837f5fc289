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

#include "lieforge/linalg.h"

#include <algorithm>

namespace lieforge {
namespace {

// Scales a rational row to a primitive integer row.
std::vector<Integer> to_primitive(const RationalVector& row) {
  Integer lcm(1);
  for (const Rational& q : row) {
    if (sgn(q) != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  }
  std::vector<Integer> out(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (sgn(row[i]) != 0) out[i] = row[i].get_num() * (lcm / row[i].get_den());
  }
  return out;
}

void make_primitive(std::vector<Integer>& row) {
  Integer g(0);
  for (const Integer& z : row) {
    if (sgn(z) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  }
  if (g == 0 || g == 1) return;
  for (Integer& z : row) {
    if (sgn(z) != 0) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
  }
}

int leading(const std::vector<Integer>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (sgn(row[i]) != 0) return static_cast<int>(i);
  }
  return -1;
}

bool is_monomial_nonzero(const Expr& e) { return e.is_monomial(); }

}  // namespace

void EchelonBuilder::reduce(std::vector<Integer>& row) const {
  for (const auto& [p, prow] : rows_) {
    if (sgn(row[p]) == 0) continue;
    // row <- prow[p] * row - row[p] * prow (fraction-free step)
    Integer a = prow[p];
    Integer b = row[p];
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    a /= g;
    b /= g;
    for (int j = 0; j < cols_; ++j) {
      if (sgn(row[j]) == 0 && sgn(prow[j]) == 0) continue;
      row[j] = a * row[j] - b * prow[j];
    }
    make_primitive(row);
  }
}

bool EchelonBuilder::add_row(const RationalVector& row) {
  if (static_cast<int>(row.size()) != cols_) throw DomainError("row length mismatch");
  std::vector<Integer> r = to_primitive(row);
  reduce(r);
  int p = leading(r);
  if (p < 0) return false;
  if (sgn(r[p]) < 0) {
    for (Integer& z : r) z = -z;
  }
  rows_.emplace(p, std::move(r));
  return true;
}

bool EchelonBuilder::add_sparse_row(const std::map<int, Rational>& row) {
  RationalVector dense(cols_);
  for (const auto& [j, q] : row) dense.at(j) = q;
  return add_row(dense);
}

std::vector<int> EchelonBuilder::pivots() const {
  std::vector<int> out;
  for (const auto& [p, r] : rows_) out.push_back(p);
  return out;
}

std::vector<RationalVector> EchelonBuilder::rref() const {
  // Back-substitute from the highest pivot down.
  std::vector<std::pair<int, RationalVector>> rs;
  for (const auto& [p, r] : rows_) {
    RationalVector q(cols_);
    for (int j = 0; j < cols_; ++j) q[j] = Rational(r[j], r[p]);
    for (auto& x : q) x.canonicalize();
    rs.emplace_back(p, std::move(q));
  }
  for (std::size_t i = rs.size(); i-- > 0;) {
    int p = rs[i].first;
    for (std::size_t k = 0; k < i; ++k) {
      Rational f = rs[k].second[p];
      if (sgn(f) == 0) continue;
      for (int j = p; j < cols_; ++j) rs[k].second[j] -= f * rs[i].second[j];
    }
  }
  std::vector<RationalVector> out;
  for (auto& [p, r] : rs) out.push_back(std::move(r));
  return out;
}

std::vector<RationalVector> EchelonBuilder::nullspace() const {
  auto r = rref();
  auto piv = pivots();
  std::vector<bool> is_pivot(cols_, false);
  for (int p : piv) is_pivot[p] = true;
  EchelonBuilder basis(cols_);
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(cols_);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r[i][f];
    basis.add_row(v);
  }
  return basis.rref();
}

std::vector<RationalVector> rref(const std::vector<RationalVector>& rows, int cols) {
  EchelonBuilder b(cols);
  for (const auto& r : rows) b.add_row(r);
  return b.rref();
}

int rank_of(const std::vector<RationalVector>& rows, int cols) {
  EchelonBuilder b(cols);
  for (const auto& r : rows) b.add_row(r);
  return b.rank();
}

std::vector<RationalVector> nullspace(const std::vector<RationalVector>& rows, int cols) {
  EchelonBuilder b(cols);
  for (const auto& r : rows) b.add_row(r);
  return b.nullspace();
}

std::optional<RationalVector> solve_columns(const std::vector<RationalVector>& columns,
                                            const RationalVector& target) {
  const int n = static_cast<int>(columns.size());
  const std::size_t m = target.size();
  // Augmented system: rows are equations, last column is the target.
  std::vector<RationalVector> rows(m, RationalVector(n + 1));
  for (int j = 0; j < n; ++j) {
    if (columns[j].size() != m) throw DomainError("column length mismatch");
    for (std::size_t i = 0; i < m; ++i) rows[i][j] = columns[j][i];
  }
  for (std::size_t i = 0; i < m; ++i) rows[i][n] = target[i];
  EchelonBuilder b(n + 1);
  for (const auto& r : rows) b.add_row(r);
  auto piv = b.pivots();
  if (!piv.empty() && piv.back() == n) return std::nullopt;
  auto r = b.rref();
  RationalVector x(n);
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r[i][n];
  return x;
}

std::optional<std::vector<Expr>> solve_symbolic(const std::vector<std::vector<Expr>>& columns,
                                                const std::vector<Expr>& target) {
  const std::size_t n = columns.size();
  const std::size_t m = target.size();
  std::vector<std::vector<Expr>> a(m, std::vector<Expr>(n + 1));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) a[i][j] = columns[j][i];
  }
  for (std::size_t i = 0; i < m; ++i) a[i][n] = target[i];
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t best = m;
    for (std::size_t i = row; i < m; ++i) {
      if (a[i][col].is_zero()) continue;
      if (best == m || (is_monomial_nonzero(a[i][col]) && !is_monomial_nonzero(a[best][col]))) {
        best = i;
      }
    }
    if (best == m) continue;
    std::swap(a[row], a[best]);
    Expr inv = reciprocal(a[row][col]);
    for (std::size_t j = col; j <= n; ++j) a[row][j] = a[row][j] * inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || a[i][col].is_zero()) continue;
      Expr f = a[i][col];
      for (std::size_t j = col; j <= n; ++j) a[i][j] = a[i][j] - f * a[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < m; ++i) {
    if (!a[i][n].is_zero()) return std::nullopt;
  }
  std::vector<Expr> x(n);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = a[i][n];
  return x;
}

int rank_symbolic(const std::vector<std::vector<Expr>>& rows_in) {
  auto a = rows_in;
  if (a.empty()) return 0;
  const std::size_t n = a[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < a.size(); ++col) {
    std::size_t best = a.size();
    for (std::size_t i = row; i < a.size(); ++i) {
      if (a[i][col].is_zero()) continue;
      if (best == a.size() || (a[i][col].is_monomial() && !a[best][col].is_monomial())) best = i;
    }
    if (best == a.size()) continue;
    std::swap(a[row], a[best]);
    Expr inv = reciprocal(a[row][col]);
    for (std::size_t j = col; j < n; ++j) a[row][j] = a[row][j] * inv;
    for (std::size_t i = row + 1; i < a.size(); ++i) {
      if (a[i][col].is_zero()) continue;
      Expr f = a[i][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] = a[i][j] - f * a[row][j];
    }
    ++row;
  }
  return static_cast<int>(row);
}

}  // namespace lieforge
