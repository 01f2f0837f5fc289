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

#include "lieforge/liealg.h"

#include <algorithm>
#include <optional>

#include "lieforge/parallel.h"
#include "lieforge/parse.h"

namespace lieforge {
namespace {

using Vec = std::vector<Expr>;

void require_same_space(const VectorField& x, const VectorField& y) {
  if (x.jet.independents != y.jet.independents || x.jet.dependents != y.jet.dependents) {
    throw DomainError("bracket of fields over different jet spaces");
  }
}

// Bracket of two coordinate vectors through the constants.
Vec bracket_coords(const StructureTable& t, const Vec& a, const Vec& b) {
  const std::size_t n = t.dim();
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      Expr ab = a[i] * b[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (!t.c[i][j][k].is_zero()) out[k] += ab * t.c[i][j][k];
      }
    }
  }
  return out;
}

// Greedy independent subset of rows.
std::vector<Vec> independent_rows(const std::vector<Vec>& rows) {
  std::vector<Vec> kept;
  for (const Vec& r : rows) {
    bool zero = std::all_of(r.begin(), r.end(), [](const Expr& e) { return e.is_zero(); });
    if (zero) continue;
    kept.push_back(r);
    if (rank_symbolic(kept) < static_cast<int>(kept.size())) kept.pop_back();
  }
  return kept;
}

std::vector<Vec> bracket_span(const StructureTable& t, const std::vector<Vec>& a,
                              const std::vector<Vec>& b) {
  std::vector<Vec> rows;
  for (const Vec& x : a) {
    for (const Vec& y : b) rows.push_back(bracket_coords(t, x, y));
  }
  return independent_rows(rows);
}

// Nullspace of a symbolic matrix (rows x n) by Gauss-Jordan elimination.
std::vector<Vec> nullspace_symbolic(std::vector<Vec> a, std::size_t n) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < a.size(); ++col) {
    std::size_t best = a.size();
    for (std::size_t i = row; i < a.size(); ++i) {
      if (!a[i][col].is_zero()) {
        best = i;
        break;
      }
    }
    if (best == a.size()) continue;
    std::swap(a[row], a[best]);
    Expr inv = reciprocal(a[row][col]);
    for (std::size_t j = col; j < n; ++j) a[row][j] = a[row][j] * inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col].is_zero()) continue;
      Expr f = a[i][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] = a[i][j] - f * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  std::vector<Vec> out;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    Vec v(n);
    v[free] = Expr(1L);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vec> identity_rows(std::size_t n) {
  std::vector<Vec> rows(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = Expr(1L);
  return rows;
}

}  // namespace

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  require_same_space(x, y);
  VectorField r;
  r.jet = x.jet;
  for (const auto& [name, yc] : y.components()) {
    Expr v = apply_field(x, yc) - apply_field(y, x.component(name));
    if (v.is_zero()) continue;
    if (r.jet.is_independent(name)) {
      r.xi[name] = v;
    } else {
      r.eta[name] = v;
    }
  }
  return r;
}

bool StructureTable::is_closed() const {
  for (const auto& row : closed) {
    for (bool b : row) {
      if (!b) return false;
    }
  }
  return true;
}

bool StructureTable::is_antisymmetric() const {
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) {
      if (closed[i][j] != closed[j][i]) return false;
      if (!(lie_bracket(basis[j], basis[i]) == Expr(-1L) * brackets[i][j])) return false;
      for (std::size_t k = 0; k < dim(); ++k) {
        if (!(c[i][j][k] + c[j][i][k]).is_zero()) return false;
      }
    }
  }
  return true;
}

StructureTable structure_constants(const std::vector<VectorField>& basis, int threads) {
  const std::size_t n = basis.size();
  if (field_rank(basis) != static_cast<int>(n)) {
    throw DomainError("structure constants need a linearly independent basis");
  }
  StructureTable t;
  t.basis = basis;
  t.c.assign(n, std::vector<Vec>(n, Vec(n)));
  t.closed.assign(n, std::vector<bool>(n, true));
  t.brackets.assign(n, std::vector<VectorField>(n));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) pairs.emplace_back(i, j);
  }
  struct PairResult {
    VectorField bracket;
    std::optional<Vec> coeffs;
  };
  std::vector<PairResult> results(pairs.size());
  parallel_for(pairs.size(), threads, [&](std::size_t p, int) {
    auto [i, j] = pairs[p];
    results[p].bracket = lie_bracket(basis[i], basis[j]);
    if (results[p].bracket.is_zero()) {
      results[p].coeffs = Vec(n);
    } else {
      results[p].coeffs = span_membership(results[p].bracket, basis);
    }
  });
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    auto [i, j] = pairs[p];
    t.brackets[i][j] = results[p].bracket;
    t.brackets[j][i] = Expr(-1L) * results[p].bracket;
    if (!results[p].coeffs) {
      t.closed[i][j] = t.closed[j][i] = false;
      continue;
    }
    for (std::size_t k = 0; k < n; ++k) {
      t.c[i][j][k] = (*results[p].coeffs)[k];
      t.c[j][i][k] = -(*results[p].coeffs)[k];
    }
  }
  return t;
}

bool jacobi_check(const StructureTable& t) {
  if (!t.is_closed()) return false;
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          Expr sum;
          for (std::size_t m = 0; m < n; ++m) {
            sum += t.c[i][j][m] * t.c[m][k][l] + t.c[j][k][m] * t.c[m][i][l] +
                   t.c[k][i][m] * t.c[m][j][l];
          }
          if (!sum.is_zero()) return false;
        }
      }
    }
  }
  return true;
}

AlgebraSignature algebra_signature(const StructureTable& t) {
  if (!t.is_closed()) throw DomainError("signature needs a closed structure table");
  const std::size_t n = t.dim();
  AlgebraSignature s;
  s.dimension = static_cast<int>(n);
  std::vector<Vec> g = identity_rows(n);

  std::vector<Vec> cur = g;
  s.derived_series.push_back(static_cast<int>(n));
  while (!cur.empty()) {
    std::vector<Vec> next = bracket_span(t, cur, cur);
    if (next.size() == cur.size()) break;
    s.derived_series.push_back(static_cast<int>(next.size()));
    cur = std::move(next);
  }
  s.solvable = s.derived_series.back() == 0;

  cur = g;
  s.lower_central_series.push_back(static_cast<int>(n));
  while (!cur.empty()) {
    std::vector<Vec> next = bracket_span(t, g, cur);
    if (next.size() == cur.size()) break;
    s.lower_central_series.push_back(static_cast<int>(next.size()));
    cur = std::move(next);
  }
  s.nilpotent = s.lower_central_series.back() == 0;
  s.abelian = n == 0 || (s.derived_series.size() > 1 && s.derived_series[1] == 0);

  // Center: z with sum_i z_i c[i][j][k] = 0 for all j, k.
  std::vector<Vec> rows;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      Vec r(n);
      bool any = false;
      for (std::size_t i = 0; i < n; ++i) {
        r[i] = t.c[i][j][k];
        any = any || !r[i].is_zero();
      }
      if (any) rows.push_back(std::move(r));
    }
  }
  std::vector<Vec> center = nullspace_symbolic(rows, n);
  s.center = static_cast<int>(center.size());
  std::vector<Vec> derived = bracket_span(t, g, g);
  std::vector<Vec> both = center;
  both.insert(both.end(), derived.begin(), derived.end());
  int sum_dim = static_cast<int>(independent_rows(both).size());
  int meet = s.center + static_cast<int>(derived.size()) - sum_dim;
  s.abelian_summand = s.center - meet;
  return s;
}

std::vector<CatalogueBracket> catalogue_brackets(const std::string& family) {
  JetSpec none{{}, {}, {"c"}, {}, 0};
  auto q = [&](const char* text) { return parse_expr(text, none); };
  if (family == "a") {
    return {{1, 5, {{1, q("1")}}},
            {1, 6, {{2, q("1")}}},
            {1, 7, {{5, q("2")}, {4, q("-1/2")}}},
            {2, 5, {{2, q("1/2")}}},
            {2, 6, {{3, q("1/2")}}},
            {2, 7, {{6, q("1")}}},
            {5, 6, {{6, q("1/2")}}},
            {5, 7, {{7, q("1")}}}};
  }
  if (family == "b") {
    return {{1, 3, {{1, q("1")}}},
            {2, 3, {{2, q("1/3")}}},
            {5, 6, {{7, q("-1/2")}}},
            {5, 7, {{6, q("-2")}}}};
  }
  if (family == "f") {
    return {{3, 4, {{5, q("-1/sqrt(c)")}}},
            {3, 5, {{4, q("-sqrt(c)")}}},
            {4, 5, {{3, q("sqrt(c)")}}}};
  }
  throw DomainError("catalogue bracket tables exist for families a, b and f");
}

std::vector<BracketDisagreement> compare_with_catalogue(
    const StructureTable& t, const std::vector<CatalogueBracket>& table) {
  const std::size_t n = t.dim();
  std::vector<BracketDisagreement> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec expected(n);
      for (const CatalogueBracket& b : table) {
        int sign = 0;
        if (b.i == static_cast<int>(i) + 1 && b.j == static_cast<int>(j) + 1) sign = 1;
        if (b.j == static_cast<int>(i) + 1 && b.i == static_cast<int>(j) + 1) sign = -1;
        if (sign == 0) continue;
        for (const auto& [k, v] : b.value) {
          if (k < 1 || k > static_cast<int>(n)) throw DomainError("catalogue index out of range");
          expected[k - 1] += sign > 0 ? v : -v;
        }
      }
      bool same = t.closed[i][j];
      for (std::size_t k = 0; same && k < n; ++k) same = (t.c[i][j][k] - expected[k]).is_zero();
      if (same) continue;
      BracketDisagreement d;
      d.i = static_cast<int>(i) + 1;
      d.j = static_cast<int>(j) + 1;
      if (t.closed[i][j]) d.computed = t.c[i][j];
      d.catalogue = expected;
      out.push_back(std::move(d));
    }
  }
  return out;
}

std::string combination_str(const std::vector<Expr>& coeffs, const std::string& prefix) {
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    std::string name = prefix + std::to_string(k + 1);
    auto q = coeffs[k].as_rational();
    std::string piece = q ? scale(symbol(name), *q).str() : "(" + coeffs[k].str() + ")*" + name;
    bool negative = piece[0] == '-';
    if (out.empty()) {
      out = piece;
    } else {
      out += negative ? " - " + piece.substr(1) : " + " + piece;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace lieforge
