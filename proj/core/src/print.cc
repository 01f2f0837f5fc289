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

#include <algorithm>
#include <string>

#include "lieforge/expr.h"

namespace lieforge {
namespace {

std::string jet_name(AtomRef a) {
  if (a->derivs.empty()) return a->name;
  if (a->kind == AtomKind::kJet &&
      std::all_of(a->derivs.begin(), a->derivs.end(), [](char ch) { return ch == 's'; })) {
    return a->name + std::string(a->derivs.size(), '\'');
  }
  return a->name + "_" + a->derivs;
}

std::string call(const char* fn, const Expr& arg) { return std::string(fn) + "(" + arg.str() + ")"; }

std::string power(const std::string& base, int exp) {
  if (exp == 1) return base;
  return base + "^" + std::to_string(exp);
}

}  // namespace

std::string to_string(AtomRef a) {
  switch (a->kind) {
    case AtomKind::kSymbol:
      return a->name;
    case AtomKind::kRoot:
      return "sqrt(" + a->name + ")";
    case AtomKind::kJet:
    case AtomKind::kUnknown:
      return jet_name(a);
    case AtomKind::kImaginary:
      return "I";
    case AtomKind::kExp:
      return call("exp", a->arg);
    case AtomKind::kSin:
      return call("sin", a->arg);
    case AtomKind::kCos:
      return call("cos", a->arg);
    case AtomKind::kTan:
      return call("tan", a->arg);
    case AtomKind::kJacobiSn:
      return "sn(" + a->arg.str() + ", " + a->modulus.str() + ")";
    case AtomKind::kJacobiCn:
      return "cn(" + a->arg.str() + ", " + a->modulus.str() + ")";
    case AtomKind::kJacobiDn:
      return "dn(" + a->arg.str() + ", " + a->modulus.str() + ")";
    case AtomKind::kInverse:
      return "(" + a->arg.str() + ")";
  }
  return "?";
}

namespace {

// Prints |coef| * monomial; the sign is handled by the caller.
std::string print_term(const Monomial& m, const Rational& abs_coef) {
  std::vector<Factor> fs(m.factors().begin(), m.factors().end());
  std::stable_sort(fs.begin(), fs.end(), [](const Factor& x, const Factor& y) {
    bool xi = x.atom->kind == AtomKind::kImaginary;
    bool yi = y.atom->kind == AtomKind::kImaginary;
    if (xi != yi) return xi;
    return structural_less(x.atom, y.atom);
  });
  std::vector<std::string> num;
  std::vector<std::string> den;
  for (const Factor& f : fs) {
    if (f.atom->kind == AtomKind::kInverse) {
      den.push_back(power(to_string(f.atom), f.exp));
    } else if (f.exp < 0) {
      den.push_back(power(to_string(f.atom), -f.exp));
    } else {
      num.push_back(power(to_string(f.atom), f.exp));
    }
  }
  std::string out;
  const mpz_class& n = abs_coef.get_num();
  const mpz_class& d = abs_coef.get_den();
  if (n != 1 || num.empty()) out = n.get_str();
  for (const auto& s : num) {
    if (!out.empty()) out += "*";
    out += s;
  }
  if (d != 1) out += "/" + d.get_str();
  for (const auto& s : den) out += "/" + s;
  return out;
}

}  // namespace

std::string to_string(const Monomial& m) { return print_term(m, Rational(1)); }

std::string Expr::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : sorted_terms(*this)) {
    bool neg = sgn(t.coef) < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    out += print_term(t.mono, abs(t.coef));
    first = false;
  }
  return out;
}

}  // namespace lieforge
