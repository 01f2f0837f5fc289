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

#include "lieforge/eval.h"

#include <atomic>
#include <cmath>
#include <set>
#include <unordered_map>

#include "lieforge/special_functions.h"

namespace lieforge {
namespace {

class Evaluator {
 public:
  explicit Evaluator(const Point& point) : point_(point) {}

  // Returns the value and the sum of absolute term values.
  std::pair<Complex, double> eval(const Expr& e) {
    Complex sum = 0.0;
    double scale = 0.0;
    for (const Term& t : e.terms()) {
      Complex v = t.coef.get_d();
      for (const Factor& f : t.mono.factors()) {
        Complex a = atom(f.atom);
        if (f.exp < 0 && std::abs(a) == 0.0) throw PoleError("division by zero at " + to_string(f.atom));
        v *= f.exp == 1 ? a : std::pow(a, f.exp);
      }
      sum += v;
      scale += std::abs(v);
    }
    return {sum, scale};
  }

  Complex atom(AtomRef a) {
    auto it = cache_.find(a);
    if (it != cache_.end()) return it->second;
    Complex r = compute(a);
    cache_.emplace(a, r);
    return r;
  }

 private:
  double real_arg(const Expr& e, AtomRef owner) {
    Complex z = eval(e).first;
    if (std::abs(z.imag()) > 1e-12 * std::max(1.0, std::abs(z.real()))) {
      throw EvaluationError("complex value for real argument of " + to_string(owner));
    }
    return z.real();
  }

  Complex compute(AtomRef a) {
    auto bound = point_.find(a);
    if (bound != point_.end()) return bound->second;
    switch (a->kind) {
      case AtomKind::kSymbol:
      case AtomKind::kJet:
      case AtomKind::kUnknown:
        throw EvaluationError("unbound atom " + to_string(a));
      case AtomKind::kRoot:
        return std::sqrt(atom(symbol_atom(a->name)));
      case AtomKind::kImaginary:
        return {0.0, 1.0};
      case AtomKind::kExp:
        return std::exp(eval(a->arg).first);
      case AtomKind::kSin:
        return std::sin(eval(a->arg).first);
      case AtomKind::kCos:
        return std::cos(eval(a->arg).first);
      case AtomKind::kTan: {
        Complex z = eval(a->arg).first;
        if (std::abs(std::cos(z)) < 1e-12) throw PoleError("tan pole at " + to_string(a));
        return std::tan(z);
      }
      case AtomKind::kJacobiSn:
      case AtomKind::kJacobiCn:
      case AtomKind::kJacobiDn: {
        double u = real_arg(a->arg, a);
        double k = real_arg(a->modulus, a);
        auto j = numeric::jacobi_elliptic(u, k);
        if (a->kind == AtomKind::kJacobiSn) return j.sn;
        if (a->kind == AtomKind::kJacobiCn) return j.cn;
        return j.dn;
      }
      case AtomKind::kInverse: {
        auto [v, scale] = eval(a->arg);
        if (std::abs(v) <= 1e-12 * std::max(scale, 1e-300)) {
          throw PoleError("vanishing denominator " + to_string(a));
        }
        return 1.0 / v;
      }
    }
    throw EvaluationError("unhandled atom");
  }

  const Point& point_;
  std::unordered_map<AtomRef, Complex> cache_;
};

void modulus_symbols(const Expr& e, std::set<AtomRef>& out) {
  for (AtomRef a : e.atoms_deep()) {
    if (a->kind == AtomKind::kJacobiSn || a->kind == AtomKind::kJacobiCn ||
        a->kind == AtomKind::kJacobiDn) {
      for (AtomRef m : a->modulus.atoms_deep()) {
        if (m->kind == AtomKind::kSymbol) out.insert(m);
      }
    }
  }
}

}  // namespace

Complex eval_numeric(const Expr& e, const Point& point) { return Evaluator(point).eval(e).first; }

namespace {
std::atomic<std::uint64_t> g_default_seed{42};
}  // namespace

void set_default_seed(std::uint64_t seed) { g_default_seed = seed; }
std::uint64_t default_seed() { return g_default_seed; }

const char* to_string(ZeroStatus s) {
  switch (s) {
    case ZeroStatus::kZero:
      return "Zero";
    case ZeroStatus::kNonzero:
      return "Nonzero";
    case ZeroStatus::kProbablyZero:
      return "ProbablyZero";
  }
  return "?";
}

bool in_complete_class(const Expr& e) {
  bool has_tan = false;
  bool has_trig = false;
  for (AtomRef a : e.atoms_deep()) {
    switch (a->kind) {
      case AtomKind::kInverse:
      case AtomKind::kJacobiSn:
      case AtomKind::kJacobiCn:
      case AtomKind::kJacobiDn:
        return false;
      case AtomKind::kTan:
        has_tan = true;
        break;
      case AtomKind::kSin:
      case AtomKind::kCos:
        has_trig = true;
        break;
      default:
        break;
    }
  }
  return !(has_tan && has_trig);
}

Point random_point(const Expr& e, std::mt19937_64& rng) {
  std::set<AtomRef> moduli;
  modulus_symbols(e, moduli);
  Point p;
  for (AtomRef a : e.atoms_deep()) {
    if (!a->is_coordinate()) continue;
    if (moduli.count(a)) {
      p[a] = static_cast<double>(1 + rng() % 8) / 10.0;
      continue;
    }
    long q = 1 + static_cast<long>(rng() % 12);
    long n = static_cast<long>(rng() % static_cast<std::uint64_t>(4 * q + 1)) - 2 * q;
    p[a] = static_cast<double>(n) / static_cast<double>(q);
  }
  return p;
}

ZeroStatus equals_zero(const Expr& e, const ZeroTestOptions& options) {
  if (e.is_zero()) return ZeroStatus::kZero;
  if (in_complete_class(e)) return ZeroStatus::kNonzero;
  std::mt19937_64 rng(options.seed);
  int evaluated = 0;
  for (int attempt = 0; attempt < options.samples * 5 && evaluated < options.samples; ++attempt) {
    Point p = random_point(e, rng);
    std::pair<Complex, double> r;
    try {
      r = Evaluator(p).eval(e);
    } catch (const PoleError&) {
      continue;
    }
    if (!std::isfinite(std::abs(r.first))) continue;
    ++evaluated;
    if (std::abs(r.first) > options.tolerance * std::max(1.0, r.second)) return ZeroStatus::kNonzero;
  }
  if (evaluated == 0) throw EvaluationError("every sample point hit a pole");
  return ZeroStatus::kProbablyZero;
}

}  // namespace lieforge
