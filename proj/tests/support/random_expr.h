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

#include <cmath>
#include <random>
#include <sstream>
#include <string>

#include "lieforge/eval.h"
#include "lieforge/expr.h"
#include "lieforge/jet.h"
#include "lieforge/parse.h"

namespace lieforge::testing {

/// Random expressions over t, x, c and low-order jets of v, w, with
/// polynomial structure, sin/cos/exp of linear arguments and occasional
/// tan and reciprocal factors.
class RandomExprGen {
 public:
  explicit RandomExprGen(std::uint64_t seed) : rng_(seed) {}

  Expr expr(int depth) {
    if (depth <= 0) return leaf();
    switch (pick(9)) {
      case 0:
      case 1:
        return expr(depth - 1) + expr(depth - 1);
      case 2:
      case 3:
        return expr(depth - 1) * expr(depth - 1);
      case 4:
        return pow(expr(depth - 1), 2 + pick(2));
      case 5:
        return scale(expr(depth - 1), rational()) * (pick(2) ? sin(arg()) : cos(arg()));
      case 6:
        return expr(depth - 1) * exp(arg());
      case 7:
        return pick(4) == 0 ? tan(arg()) : leaf() * sin(arg());
      default:
        return pick(5) == 0 ? reciprocal(symbol("t") * symbol("t") + Expr(1)) * leaf()
                            : leaf() + expr(depth - 1);
    }
  }

  std::mt19937_64& rng() { return rng_; }

  static JetSpec spec() { return real_pde_spec({"c"}); }

 private:
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  Rational rational() {
    int num = std::uniform_int_distribution<int>(-3, 3)(rng_);
    if (num == 0) num = 1;
    Rational q(num, 1 + pick(3));
    q.canonicalize();
    return q;
  }

  Expr leaf() {
    switch (pick(9)) {
      case 0: return symbol("t");
      case 1: return symbol("x");
      case 2: return symbol("c");
      case 3: return jet("v");
      case 4: return jet("w");
      case 5: return jet("v", "x");
      case 6: return jet("w", "xx");
      case 7: return imag() * jet("w", "x");
      default: return Expr(rational());
    }
  }

  Expr arg() {
    Expr a = scale(symbol("t"), rational()) + scale(symbol("x"), rational());
    if (pick(2)) a += scale(jet("v"), rational());
    return a;
  }

  std::mt19937_64 rng_;
};

struct PropertyTally {
  int cases = 0;
  int idempotence = 0;
  int product_rule = 0;
  int roundtrip = 0;
  int zero_soundness = 0;
  std::string first_failure;

  [[nodiscard]] int failures() const {
    return idempotence + product_rule + roundtrip + zero_soundness;
  }
};

/// Equal canonically, or (outside the complete class) numerically equal at
/// random points.
inline bool same_value(const Expr& a, const Expr& b) {
  if (a == b) return true;
  Expr d = a - b;
  return !in_complete_class(d) && equals_zero(d) != ZeroStatus::kNonzero;
}

inline double max_abs_at_random_points(const Expr& e, std::mt19937_64& rng, int points) {
  double worst = 0.0;
  for (int i = 0; i < points; ++i) {
    try {
      worst = std::max(worst, std::abs(eval_numeric(e, random_point(e, rng))));
    } catch (const PoleError&) {
    }
  }
  return worst;
}

/// Canonical idempotence, product rule for d/dt and d/dv, parse/print
/// roundtrip and equals_zero soundness on `count` random expressions.
inline PropertyTally run_property_suite(int count, std::uint64_t seed) {
  RandomExprGen gen(seed);
  const JetSpec spec = RandomExprGen::spec();
  const AtomRef dt = symbol_atom("t");
  const AtomRef dv = jet_atom("v");
  PropertyTally tally;
  auto fail = [&](int& counter, const std::string& what, const Expr& e) {
    ++counter;
    if (tally.first_failure.empty()) tally.first_failure = what + ": " + e.str();
  };
  for (int i = 0; i < count; ++i) {
    ++tally.cases;
    Expr a = gen.expr(4);
    Expr b = gen.expr(3);

    if (to_canonical(a) != a || to_canonical(to_canonical(a)) != to_canonical(a)) {
      fail(tally.idempotence, "idempotence", a);
    }

    for (AtomRef var : {dt, dv}) {
      Expr lhs = derive(a * b, var);
      Expr rhs = derive(a, var) * b + a * derive(b, var);
      if (!same_value(lhs, rhs)) fail(tally.product_rule, "product rule", a * b);
    }

    try {
      if (parse_expr(a.str(), spec) != a) fail(tally.roundtrip, "roundtrip", a);
    } catch (const Error& e) {
      fail(tally.roundtrip, std::string("roundtrip threw ") + e.what(), a);
    }

    // Zero claims must hold numerically; known identities must not be refuted.
    Expr identity = (a + Expr(1)) * (a - Expr(1)) - (pow(a, 2) - Expr(1));
    if (equals_zero(identity) == ZeroStatus::kNonzero) fail(tally.zero_soundness, "identity", a);
    Expr sum = a + b;
    ZeroStatus st = equals_zero(sum);
    double mag = max_abs_at_random_points(sum, gen.rng(), 3);
    if (st != ZeroStatus::kNonzero && mag > 1e-6) {
      fail(tally.zero_soundness, "false zero", sum);
    }
    if (st == ZeroStatus::kNonzero && sum.is_zero()) fail(tally.zero_soundness, "false nonzero", sum);
  }
  return tally;
}

}  // namespace lieforge::testing
