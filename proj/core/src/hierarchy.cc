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

#include "lieforge/hierarchy.h"

#include <map>

#include "lieforge/parse.h"

namespace lieforge {
namespace {

void require_complex(const Expr& e) {
  for (AtomRef a : e.atoms_deep()) {
    if (a->kind == AtomKind::kJet && a->name != "u" && a->name != "ubar") {
      throw DomainError("operator argument must live in the complex (u, ubar) jet space; found " +
                        to_string(a));
    }
  }
}

Expr phase() { return exp(imag() * (jet("u") - jet("ubar"))); }

}  // namespace

Expr apply_operator_P(const Expr& beta) {
  require_complex(beta);
  return imag() * phase() * beta;
}

Expr apply_operator_L(const Expr& tau) {
  require_complex(tau);
  return imag() * total_derivative(tau, 'x') + jet("u", "x") * tau;
}

Expr hierarchy_member(int n, int max_n) {
  if (n < 0) throw DomainError("hierarchy index must be nonnegative");
  if (n > max_n) {
    throw DomainError("hierarchy index " + std::to_string(n) + " exceeds the configured maximum " +
                      std::to_string(max_n));
  }
  Expr seed = imag() * jet("u", "x") * exp(-(imag() * (jet("u") - jet("ubar"))));
  Expr e = apply_operator_P(seed);
  for (int i = 0; i < n; ++i) e = apply_operator_L(e);
  return e;
}

std::pair<Expr, Expr> complex_split(const Expr& rhs) {
  require_complex(rhs);
  std::map<AtomRef, Expr> bindings;
  for (AtomRef a : rhs.atoms_deep()) {
    if (a->kind != AtomKind::kJet) continue;
    Expr v = jet("v", a->derivs);
    Expr w = jet("w", a->derivs);
    bindings[a] = a->name == "u" ? v + imag() * w : v - imag() * w;
  }
  Expr real = substitute(rhs, bindings);
  auto [re, im] = split_imaginary(real);
  for (const Expr* part : {&re, &im}) {
    for (AtomRef a : part->atoms_deep()) {
      if (a->kind == AtomKind::kImaginary) throw Error("residual imaginary unit after splitting");
    }
  }
  return {re, im};
}

PDESystem split_system(const Expr& complex_rhs, std::string label) {
  auto [re, im] = complex_split(complex_rhs);
  return PDESystem{real_pde_spec(), {{"v", re}, {"w", im}}, std::move(label)};
}

PDESystem catalogue_member(int k) {
  static const char* kRhs[4][2] = {
      {"-v_x", "-w_x"},
      {"-v_x^2 + w_x^2 + w_xx", "-2*v_x*w_x - v_xx"},
      {"-v_x^3 + 3*v_x*w_x^2 + 3*w_x*v_xx + 3*v_x*w_xx + v_xxx",
       "-3*v_x^2*w_x + w_x^3 - 3*v_x*v_xx + 3*w_x*w_xx + w_xxx"},
      {"v_x^4 - 6*v_x^2*w_x^2 + w_x^4 + 3*w_x*v_xx + 6*v_x*w_x*v_xx + 3*v_xx^2 + 3*v_x*w_xx"
       " + 3*v_x^2*w_xx - 3*w_x^2*w_xx - 3*w_xx^2 + 4*v_x*v_xxx - 4*w_x*w_xxx - w_xxxx",
       "4*v_x^3*w_x - 4*v_x*w_x^3 - 3*v_x*v_xx - 3*v_x^2*v_xx + 3*w_x^2*v_xx + 3*w_x*w_xx"
       " + 6*v_x*w_x*w_xx + 6*v_xx*w_xx + 4*w_x*v_xxx + 4*v_x*w_xxx + v_xxxx"},
  };
  if (k < 1 || k > 4) throw DomainError("catalogue member must be in 1..4");
  JetSpec spec = real_pde_spec();
  PDESystem s{spec, {}, "member " + std::to_string(k)};
  s.equations.push_back({"v", parse_expr(kRhs[k - 1][0], spec)});
  s.equations.push_back({"w", parse_expr(kRhs[k - 1][1], spec)});
  return s;
}

Expr catalogue_member4_complex() {
  return parse_expr("u_x^4 + 3*u_xx^2 + 4*u_x*u_xxx + I*(-3*u_x*u_xx - 3*u_x^2*u_xx + u_xxxx)",
                    complex_pde_spec());
}

AuditReport audit_member(int k) {
  PDESystem cat = catalogue_member(k);
  auto [re, im] = complex_split(hierarchy_member(k - 1));
  AuditReport r;
  r.k = k;
  r.generated = {re, im};
  for (std::size_t i = 0; i < 2; ++i) {
    r.catalogue.push_back(cat.equations[i].rhs);
    Expr d = r.generated[i] - r.catalogue[i];
    r.delta.push_back(d);
    if (d.is_zero()) continue;
    r.match = false;
    for (const Term& t : sorted_terms(d)) {
      Rational g(0);
      Rational p(0);
      for (const Term& x : r.generated[i].terms()) {
        if (x.mono == t.mono) g = x.coef;
      }
      for (const Term& x : r.catalogue[i].terms()) {
        if (x.mono == t.mono) p = x.coef;
      }
      r.items.push_back({cat.equations[i].dependent, to_string(t.mono), g, p});
    }
  }
  return r;
}

}  // namespace lieforge
