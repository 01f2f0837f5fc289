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

#include <complex>
#include <cstdint>
#include <map>
#include <random>

#include "lieforge/expr.h"

namespace lieforge {

using Complex = std::complex<double>;
using Point = std::map<AtomRef, Complex>;

/// Floating evaluation. Every coordinate atom must be bound; a root atom is
/// taken from the point when bound, otherwise as the principal square root
/// of its radicand. Throws EvaluationError for unbound atoms and PoleError
/// at tan poles and vanishing denominators.
Complex eval_numeric(const Expr& e, const Point& point);

enum class ZeroStatus { kZero, kNonzero, kProbablyZero };

const char* to_string(ZeroStatus s);

/// Process-wide seed for default-constructed ZeroTestOptions (initially 42).
void set_default_seed(std::uint64_t seed);
std::uint64_t default_seed();

struct ZeroTestOptions {
  std::uint64_t seed = default_seed();
  int samples = 200;
  double tolerance = 1e-10;
};

/// True when canonical forms decide zero for `e`: no inverse or Jacobi
/// atoms and no tan mixed with sin/cos.
bool in_complete_class(const Expr& e);

/// Zero when the canonical form is empty; Nonzero when it is not and e lies
/// in the complete class; otherwise decided by random rational-point
/// evaluation (ProbablyZero when every sample is below tolerance relative to
/// the term magnitudes). Throws EvaluationError when every sample hits a
/// pole.
ZeroStatus equals_zero(const Expr& e, const ZeroTestOptions& options = {});

/// Random rational point in [-2, 2] for every coordinate of `e`; symbols
/// used as Jacobi moduli are drawn from (0, 0.9).
Point random_point(const Expr& e, std::mt19937_64& rng);

}  // namespace lieforge
