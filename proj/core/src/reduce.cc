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

#include "lieforge/reduce.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <set>

#include "lieforge/parse.h"
#include "lieforge/special_functions.h"

namespace lieforge {
namespace {

bool depends_on(const Expr& e, AtomRef var) {
  for (AtomRef a : e.atoms_deep()) {
    if (a == var) return true;
  }
  return false;
}

std::string upper_first(const std::string& name) {
  std::string r = name;
  r[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(r[0])));
  return r;
}

Point make_point(const Bindings& params) {
  Point p;
  for (const auto& [name, v] : params) p[symbol_atom(name)] = v;
  return p;
}

JetSpec candidate_spec(std::vector<std::string> deps, std::vector<std::string> params) {
  return ode_spec(std::move(deps), std::move(params));
}

// Substitutes the candidate values (and their s-derivatives) for the jets.
Expr substitute_candidate(const Expr& e, const SolutionCandidate& cand) {
  std::map<std::string, std::vector<Expr>> derivs;
  return substitute_with(e, [&](AtomRef a) -> std::optional<Expr> {
    if (a->kind != AtomKind::kJet) return std::nullopt;
    auto it = cand.values.find(a->name);
    if (it == cand.values.end()) {
      throw DomainError("candidate '" + cand.name + "' has no value for " + a->name);
    }
    auto& chain = derivs[a->name];
    if (chain.empty()) chain.push_back(it->second);
    while (static_cast<int>(chain.size()) <= a->order()) {
      chain.push_back(total_derivative(chain.back(), 's'));
    }
    return chain[a->order()];
  });
}

Expr reduce_modulo(Expr e, const std::vector<Expr>& constraints) {
  for (const Expr& c : constraints) {
    auto var = division_variable(c);
    if (!var) continue;
    try {
      e = divide_polynomial(e, c, *var).second;
    } catch (const Error&) {
      // Not polynomial in the division variable; leave unreduced.
    }
  }
  return e;
}

double simpson(const std::function<Complex(double)>& f, double a, double b, Complex fa,
               Complex fm, Complex fb, Complex whole, double tol, int depth, Complex& out) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m);
  double rm = 0.5 * (m + b);
  Complex flm = f(lm);
  Complex frm = f(rm);
  Complex left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  Complex right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  Complex diff = left + right - whole;
  if (depth <= 0 || std::abs(diff) <= 15.0 * tol) {
    out += left + right + diff / 15.0;
    return std::abs(diff);
  }
  double e1 = simpson(f, a, m, fa, flm, fm, left, tol / 2, depth - 1, out);
  double e2 = simpson(f, m, b, fm, frm, fb, right, tol / 2, depth - 1, out);
  return e1 + e2;
}

Complex integrate(const std::function<Complex(double)>& f, double a, double b, double tol) {
  if (a == b) return 0.0;
  Complex fa = f(a);
  Complex fb = f(b);
  Complex fm = f(0.5 * (a + b));
  Complex whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  Complex out = 0.0;
  simpson(f, a, b, fa, fm, fb, whole, tol, 40, out);
  return out;
}

// Central-difference weights of sixth order for derivatives 0..4.
struct Stencil {
  int half;
  std::vector<double> w;
};

const Stencil& stencil(int order) {
  static const Stencil kStencils[] = {
      {0, {1.0}},
      {3, {-1.0 / 60, 3.0 / 20, -3.0 / 4, 0.0, 3.0 / 4, -3.0 / 20, 1.0 / 60}},
      {3, {1.0 / 90, -3.0 / 20, 3.0 / 2, -49.0 / 18, 3.0 / 2, -3.0 / 20, 1.0 / 90}},
      {4, {-7.0 / 240, 3.0 / 10, -169.0 / 120, 61.0 / 30, 0.0, -61.0 / 30, 169.0 / 120, -3.0 / 10,
           7.0 / 240}},
      {4, {7.0 / 240, -2.0 / 5, 169.0 / 60, -122.0 / 15, 91.0 / 8, -122.0 / 15, 169.0 / 60,
           -2.0 / 5, 7.0 / 240}},
  };
  if (order < 0 || order > 4) throw DomainError("finite differences support orders up to 4");
  return kStencils[order];
}

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace

// ---- similarity reduction -------------------------------------------------------

SimilarityMap invariants_of_translation(const VectorField& x) {
  if (x.jet.independents.size() != 2) throw DomainError("translation invariants need (t, x)");
  for (const auto& [name, e] : x.components()) {
    for (AtomRef a : e.atoms_deep()) {
      if (a->kind == AtomKind::kJet || a->kind == AtomKind::kUnknown ||
          (a->kind == AtomKind::kSymbol && !x.jet.is_parameter(a->name))) {
        throw DomainError("translation invariants need constant coefficients; d_" + name +
                          " has " + e.str());
      }
    }
  }
  const std::string& tn = x.jet.independents[0];
  const std::string& xn = x.jet.independents[1];
  Expr xi_t = x.xi_of(tn);
  Expr xi_x = x.xi_of(xn);
  if (xi_t.is_zero() && xi_x.is_zero()) throw DomainError("generator has no independent part");
  SimilarityMap m;
  Expr lead = xi_t.is_zero() ? xi_x : xi_t;
  Expr inv = reciprocal(lead);
  if (!xi_t.is_zero()) {
    m.s = symbol(xn) - xi_x * inv * symbol(tn);
    m.along = tn;
  } else {
    m.s = symbol(tn);
    m.along = xn;
  }
  for (const std::string& dep : x.jet.dependents) {
    Expr eta = x.eta_of(dep);
    if (!eta.is_zero()) m.shift[dep] = eta * inv;
  }
  return m;
}

Reduction travelling_wave_reduce(const PDESystem& pde, const Expr& c,
                                 const std::vector<std::string>& names) {
  pde.check_evolution_form();
  if (names.size() < pde.jet.dependents.size()) throw DomainError("too few ODE names");
  std::vector<std::string> params = pde.jet.parameters;
  for (AtomRef a : c.atoms_deep()) {
    if (a->kind == AtomKind::kSymbol &&
        std::find(params.begin(), params.end(), a->name) == params.end()) {
      params.push_back(a->name);
    }
  }
  std::map<std::string, std::string> rename;
  std::vector<std::string> deps;
  for (std::size_t i = 0; i < pde.jet.dependents.size(); ++i) {
    rename[pde.jet.dependents[i]] = names[i];
    deps.push_back(names[i]);
  }
  Reduction out;
  out.system.jet = ode_spec(deps, params);
  out.system.label = pde.label + " travelling wave";
  AtomRef t_atom = symbol_atom(pde.jet.independents[0]);
  AtomRef x_atom = symbol_atom(pde.jet.independents[1]);
  char t_char = pde.jet.independents[0][0];
  for (const Equation& eq : pde.equations) {
    Expr e = eq.rhs - lieforge::jet(eq.dependent, std::string(1, t_char));
    e = substitute_with(e, [&](AtomRef a) -> std::optional<Expr> {
      if (a->kind != AtomKind::kJet) return std::nullopt;
      auto m = static_cast<int>(std::count(a->derivs.begin(), a->derivs.end(), t_char));
      Expr r = lieforge::jet(rename.at(a->name), std::string(a->derivs.size(), 's'));
      return m == 0 ? r : pow(-c, m) * r;
    });
    if (depends_on(e, t_atom) || depends_on(e, x_atom)) {
      throw DomainError("reduced equation still depends on t or x: " + e.str());
    }
    auto classes = collect_by(e, [](AtomRef a) { return a->kind == AtomKind::kJet; });
    if (classes.size() == 1 && !classes.begin()->second.as_rational()) {
      const Expr& factor = classes.begin()->second;
      if (std::find(out.assumptions.begin(), out.assumptions.end(), factor) ==
          out.assumptions.end()) {
        out.assumptions.push_back(factor);
      }
      e = Expr::from_monomial(classes.begin()->first, Rational(1));
    }
    out.system.equations.push_back(e);
  }
  return out;
}

ODESystem order_reduce(const ODESystem& s) {
  ODESystem out;
  std::vector<std::string> deps;
  for (const std::string& d : s.jet.dependents) deps.push_back(upper_first(d));
  out.jet = ode_spec(deps, s.jet.parameters);
  out.label = s.label + " order-reduced";
  for (const Expr& e : s.equations) {
    out.equations.push_back(substitute_with(e, [&](AtomRef a) -> std::optional<Expr> {
      if (a->kind != AtomKind::kJet) return std::nullopt;
      if (a->derivs.empty()) {
        throw DomainError("order reduction needs an autonomous system; found " + to_string(a));
      }
      return lieforge::jet(upper_first(a->name), a->derivs.substr(1));
    }));
  }
  return out;
}

ODESystem catalogue_ode(const std::string& name) {
  std::vector<std::string> eqs;
  std::vector<std::string> deps{"f", "g"};
  if (name == "3.2") {
    eqs = {"g'' - f'^2 + g'^2 + c*f'", "f'' + 2*f'*g' - c*g'"};
  } else if (name == "3.3") {
    deps = {"F", "G"};
    eqs = {"G' + c*F + G^2 - F^2", "F' + 2*F*G - c*G"};
  } else if (name == "3.20") {
    eqs = {"f''' + c*f' - f'^3 + 3*f'*g'^2 + 3*g'*f'' + 3*f'*g''",
           "g''' + c*g' - 3*f'^2*g' + g'^3 - 3*f'*f'' + 3*g'*g''"};
  } else if (name == "3.22") {
    deps = {"F", "G"};
    eqs = {"F'' - c*F - F^3 + 3*F*G^2 + 3*G*F' + 3*F*G'",
           "G'' - c*G - 3*F^2*G + G^3 - 3*F*F' + 3*G*G'"};
  } else if (name == "3.47") {
    eqs = {"g'''' - (f'^4 - 6*f'^2*g'^2 + g'^4 + 3*g'*f'' + 6*f'*g'*f'' + 3*f''^2 + 3*f'*g''"
           " + 3*f'^2*g'' - 3*g'^2*g'' - 3*g''^2 + 4*f'*f''' + 4*g'*g''' + c*f')",
           "f'''' - (4*f'*g'^3 - 4*f'^3*g' + 3*f'*f'' + 3*f'^2*f'' - 3*g'^2*f'' - 3*g'*g''"
           " - 6*f'*g'*g'' - 6*f''*g'' - 4*g'*f''' + 4*f'*g''' - c*g')"};
  } else {
    throw DomainError("unknown catalogue system '" + name + "'");
  }
  ODESystem s;
  s.jet = ode_spec(deps, {"c"});
  s.label = name;
  for (const std::string& e : eqs) s.equations.push_back(parse_expr(e, s.jet));
  return s;
}

Expr catalogue_second_order() {
  return parse_expr("F'' + 3*F'^2/(2*F - c) - F*(F - c)*(2*F - c)", ode_spec({"F", "G"}, {"c"}));
}

Expr clear_denominators(const Expr& e) {
  Expr cur = e;
  std::set<AtomRef> stuck;
  for (int pass = 0; pass < 32; ++pass) {
    AtomRef inv = nullptr;
    int k = 0;
    for (const Term& t : cur.terms()) {
      for (const Factor& f : t.mono.factors()) {
        if (f.atom->kind != AtomKind::kInverse || stuck.count(f.atom)) continue;
        if (inv == nullptr) inv = f.atom;
        if (f.atom == inv) k = std::max(k, f.exp);
      }
    }
    if (inv == nullptr) return cur;
    Expr next = cancel_inverse(cur * pow(inv->arg, k), inv->arg);
    if (next.contains(inv)) {
      stuck.insert(inv);
      continue;
    }
    cur = next;
  }
  return cur;
}

bool proportional(const Expr& a, const Expr& b) {
  Expr ca = clear_denominators(a);
  Expr cb = clear_denominators(b);
  if (ca.is_zero() || cb.is_zero()) return ca.is_zero() && cb.is_zero();
  const Term& first = ca.terms()[0];
  for (const Term& t : cb.terms()) {
    if (t.mono == first.mono) return ca == scale(cb, first.coef / t.coef);
  }
  return false;
}

bool equivalent_systems(const ODESystem& a, const ODESystem& b) {
  if (a.equations.size() != b.equations.size()) return false;
  for (std::size_t i = 0; i < a.equations.size(); ++i) {
    if (!proportional(a.equations[i], b.equations[i])) return false;
  }
  return true;
}

Elimination eliminate_to_second_order(const ODESystem& s) {
  if (s.equations.size() != 2 || s.jet.dependents.size() != 2) {
    throw DomainError("elimination needs a first-order pair");
  }
  AtomRef g = jet_atom(s.jet.dependents[1]);
  AtomRef gp = jet_atom(s.jet.dependents[1], "s");
  std::size_t pivot_eq = 2;
  for (std::size_t i = 0; i < 2; ++i) {
    if (!s.equations[i].contains(gp)) {
      pivot_eq = i;
      break;
    }
  }
  if (pivot_eq == 2) throw DomainError("no equation is free of " + to_string(gp));
  auto coeffs = coefficients_in(s.equations[pivot_eq], g);
  if (!coeffs.empty() && (coeffs.rbegin()->first > 1 || coeffs.begin()->first < 0)) {
    throw DomainError("pivot equation is not linear in " + to_string(g));
  }
  Expr d = coeffs.count(1) ? coeffs.at(1) : Expr();
  if (d.is_zero()) {
    throw DegeneratePivotError("coefficient of " + to_string(g) + " vanishes identically");
  }
  Expr n = coeffs.count(0) ? -coeffs.at(0) : Expr();
  Expr dn = total_derivative(n, 's');
  Expr dd = total_derivative(d, 's');
  Expr gprime_num = dn * d - n * dd;  // G' = gprime_num / d^2

  const Expr& other = s.equations[1 - pivot_eq];
  auto classes = collect_by(other, [&](AtomRef a) { return a == g || a == gp; });
  int k = 0;
  for (const auto& [mono, coef] : classes) {
    k = std::max(k, mono.degree_of(g) + 2 * mono.degree_of(gp));
  }
  Expr eq;
  for (const auto& [mono, coef] : classes) {
    int a = mono.degree_of(g);
    int b = mono.degree_of(gp);
    eq += coef * pow(n, a) * pow(gprime_num, b) * pow(d, k - a - 2 * b);
  }
  return {n * reciprocal(d), eq};
}

// ---- closed-form solutions ---------------------------------------------------

SolutionCandidate tan_solution() {
  JetSpec j = candidate_spec({"F", "G"}, {"c", "s0"});
  SolutionCandidate c;
  c.name = "tan";
  c.values = {{"F", parse_expr("c/2", j)}, {"G", parse_expr("-(c/2)*tan((c/2)*(s - s0))", j)}};
  return c;
}

SolutionCandidate s11_solution() {
  JetSpec j = candidate_spec({"F", "G"}, {"c", "F0", "F1"});
  SolutionCandidate c;
  c.name = "s11";
  Expr num = parse_expr("F0*(exp(-2*I*c*s) - F1*c)^2 - 16*c^2 - 8*c*F0*exp(-I*c*s)", j);
  Expr den = parse_expr("F0*(exp(-2*I*c*s) - F1*c)^2 - 16*c^2", j);
  Expr f = parse_expr("c/2", j) * num * reciprocal(den);
  // 2F - c = -8 c^2 F0 exp(-I c s) / den, so -F'/(2F - c) has this closed form.
  Expr g = total_derivative(f, 's') * den * parse_expr("exp(I*c*s)/(8*c^2*F0)", j);
  c.values = {{"F", f}, {"G", g}};
  c.notes.push_back("G = -F'/(2F - c)");
  return c;
}

SolutionCandidate rational_trig_solution() {
  JetSpec j = candidate_spec({"F", "G"}, {"c", "G0", "G1"});
  SolutionCandidate c;
  c.name = "rational-trig";
  c.values = {{"F", Expr()},
              {"G", parse_expr("sqrt(c)*(sin(sqrt(c)*s) - G0*cos(sqrt(c)*s))"
                               "/(G0*sin(sqrt(c)*s) + cos(sqrt(c)*s) + G1)",
                               j)}};
  return c;
}

SolutionCandidate sn_solution() {
  JetSpec j = candidate_spec({"F", "G"}, {"c", "F0", "k"});
  SolutionCandidate c;
  c.name = "sn";
  c.values = {{"F", parse_expr("F0*sn(s, k)", j)}, {"G", Expr()}};
  c.constraints = {parse_expr("c + 1 + k^2", j), parse_expr("F0^2 - 2*k^2", j)};
  c.equations = {0};
  c.notes.push_back("checked on the F-equation; the G-equation residual is reported only");
  return c;
}

SolutionCandidate linear_solution() {
  JetSpec j = candidate_spec({"f", "g"}, {"c", "f0", "f1", "g0"});
  SolutionCandidate c;
  c.name = "linear";
  c.values = {{"f", parse_expr("f1*s + f0", j)}, {"g", parse_expr("g0", j)}};
  c.constraints = {parse_expr("f1*(f1^3 + c)", j)};
  return c;
}

std::vector<Expr> solution_residuals(const ODESystem& s, const SolutionCandidate& cand) {
  std::vector<Expr> out;
  for (const Expr& e : s.equations) out.push_back(substitute_candidate(e, cand));
  return out;
}

Complex eval_candidate(const Expr& e, double s, const Bindings& params) {
  Point p = make_point(params);
  p[symbol_atom("s")] = s;
  return eval_numeric(e, p);
}

SolutionReport verify_solution(const ODESystem& s, const SolutionCandidate& cand, VerifyMode mode,
                               const NumericOptions& options) {
  SolutionReport r;
  r.candidate = cand.name;
  r.mode = mode;
  std::vector<Expr> all = solution_residuals(s, cand);
  std::vector<std::size_t> checked = cand.equations;
  if (checked.empty()) {
    for (std::size_t i = 0; i < all.size(); ++i) checked.push_back(i);
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (std::find(checked.begin(), checked.end(), i) != checked.end()) {
      r.residuals.push_back(reduce_modulo(all[i], cand.constraints));
    } else {
      r.unchecked.push_back(all[i]);
    }
  }

  if (mode == VerifyMode::kSymbolic) {
    for (const Expr& e : r.residuals) {
      ZeroStatus st = e.is_zero() ? ZeroStatus::kZero : equals_zero(e);
      if (st == ZeroStatus::kNonzero) {
        r.status = st;
      } else if (st == ZeroStatus::kProbablyZero && r.status == ZeroStatus::kZero) {
        r.status = st;
      }
    }
    r.pass = r.status != ZeroStatus::kNonzero;
    return r;
  }

  Point base = make_point(options.params);
  bool constraints_ok = true;
  for (const Expr& c : cand.constraints) {
    if (std::abs(eval_numeric(c, base)) > 1e-9) constraints_ok = false;
  }
  AtomRef s_atom = symbol_atom("s");
  r.max_abs.assign(r.residuals.size(), 0.0);
  const double span = options.s_max - options.s_min;
  for (int i = 0; i < options.samples; ++i) {
    double s0 = options.s_min + span * (i + 0.5) / options.samples;
    for (int attempt = 0; attempt < 10; ++attempt) {
      double sv = s0 + attempt * 1e-3 * span / options.samples;
      Point p = base;
      p[s_atom] = sv;
      try {
        bool near_pole = false;
        for (const auto& [dep, v] : cand.values) {
          if (std::abs(eval_numeric(v, p)) > options.pole_guard) near_pole = true;
        }
        if (near_pole) continue;
        std::vector<double> vals;
        for (const Expr& e : r.residuals) vals.push_back(std::abs(eval_numeric(e, p)));
        for (std::size_t k = 0; k < vals.size(); ++k) {
          r.max_abs[k] = std::max(r.max_abs[k], vals[k]);
        }
        ++r.samples;
        break;
      } catch (const PoleError&) {
        continue;
      }
    }
  }
  if (r.samples == 0) throw EvaluationError("every sample of '" + cand.name + "' hit a pole");
  double worst = 0.0;
  for (double v : r.max_abs) worst = std::max(worst, v);
  r.status = worst < options.tolerance ? ZeroStatus::kProbablyZero : ZeroStatus::kNonzero;
  r.pass = constraints_ok && worst < options.tolerance;
  return r;
}

// ---- numerics -------------------------------------------------------------------

double jacobi_sn(double u, double k) {
  if (!(k >= 0.0 && k < 1.0)) throw DomainError("jacobi_sn needs 0 <= k < 1");
  return numeric::jacobi_elliptic(u, k).sn;
}

Trajectory integrate_rk4(const ODESystem& sys, const std::map<std::string, Complex>& init,
                         double s_begin, double s_end, double h, const Bindings& params,
                         double guard) {
  if (!(h > 0.0)) throw DomainError("step size must be positive");
  SolvedSystem solved = solved_form(sys);
  // State: every jet of order below the lead, per rule.
  std::vector<AtomRef> coords;
  std::vector<int> source;  // index of the next coordinate, or -(rule + 1)
  for (std::size_t r = 0; r < solved.rules.size(); ++r) {
    AtomRef lead = solved.rules[r].lead;
    for (int j = 0; j < lead->order(); ++j) {
      coords.push_back(jet_atom(lead->name, std::string(j, 's')));
      source.push_back(j + 1 < lead->order() ? static_cast<int>(coords.size())
                                             : -static_cast<int>(r) - 1);
    }
  }
  std::vector<Complex> y(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    auto it = init.find(to_string(coords[i]));
    if (it == init.end()) throw DomainError("missing initial value for " + to_string(coords[i]));
    y[i] = it->second;
  }
  Point point = make_point(params);
  AtomRef s_atom = symbol_atom("s");
  auto rhs = [&](double s, const std::vector<Complex>& state) {
    point[s_atom] = s;
    for (std::size_t i = 0; i < coords.size(); ++i) point[coords[i]] = state[i];
    std::vector<Complex> d(state.size());
    for (std::size_t i = 0; i < coords.size(); ++i) {
      d[i] = source[i] >= 0 ? state[source[i]]
                            : eval_numeric(solved.rules[-source[i] - 1].phi, point);
    }
    return d;
  };
  Trajectory tr;
  tr.h = h;
  auto record = [&](double s) {
    tr.s.push_back(s);
    for (std::size_t i = 0; i < coords.size(); ++i) tr.values[to_string(coords[i])].push_back(y[i]);
  };
  auto steps = static_cast<long>(std::llround((s_end - s_begin) / h));
  record(s_begin);
  auto axpy = [](const std::vector<Complex>& a, const std::vector<Complex>& b, double f) {
    std::vector<Complex> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + f * b[i];
    return r;
  };
  for (long n = 0; n < steps; ++n) {
    double s = s_begin + n * h;
    auto k1 = rhs(s, y);
    auto k2 = rhs(s + h / 2, axpy(y, k1, h / 2));
    auto k3 = rhs(s + h / 2, axpy(y, k2, h / 2));
    auto k4 = rhs(s + h, axpy(y, k3, h));
    for (std::size_t i = 0; i < y.size(); ++i) {
      y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    bool blown = std::any_of(y.begin(), y.end(), [&](const Complex& v) {
      return !std::isfinite(v.real()) || !std::isfinite(v.imag()) || std::abs(v) > guard;
    });
    if (blown) {
      tr.hit_pole = true;
      break;
    }
    record(s_begin + (n + 1) * h);
  }
  return tr;
}

Antiderivative antiderivative(const Expr& integrand, const Bindings& params) {
  AtomRef s_atom = symbol_atom("s");
  Point base = make_point(params);
  Complex slope = 0.0;
  struct LogCos {
    Complex a_over_b;
    Expr arg;
  };
  std::vector<LogCos> logs;
  Expr rest;
  for (const Term& t : integrand.terms()) {
    Expr term = Expr::from_monomial(t.mono, t.coef);
    if (!depends_on(term, s_atom)) {
      slope += eval_numeric(term, base);
      continue;
    }
    AtomRef tan_atom = nullptr;
    bool simple = true;
    for (const Factor& f : t.mono.factors()) {
      if (f.atom->kind == AtomKind::kTan && f.exp == 1 && tan_atom == nullptr) {
        tan_atom = f.atom;
      } else if (f.atom == s_atom || depends_on(Expr::from_atom(f.atom), s_atom)) {
        simple = false;
      }
    }
    if (simple && tan_atom != nullptr) {
      Expr b = derive(tan_atom->arg, s_atom);
      if (!depends_on(b, s_atom) && !b.is_zero()) {
        Expr a = Expr::from_monomial(t.mono.without(tan_atom), t.coef);
        logs.push_back({eval_numeric(a, base) / eval_numeric(b, base), tan_atom->arg});
        continue;
      }
    }
    rest += term;
  }
  Antiderivative out;
  out.closed_form = rest.is_zero();
  out.description = out.closed_form ? "closed form" : "closed form plus adaptive quadrature";
  auto closed = [slope, logs, base, s_atom](double s) {
    Point p = base;
    p[s_atom] = s;
    Complex v = slope * s;
    for (const LogCos& l : logs) {
      v -= l.a_over_b * std::log(std::abs(std::cos(eval_numeric(l.arg, p))));
    }
    return v;
  };
  if (out.closed_form) {
    out.eval = closed;
  } else {
    auto f = [rest, base, s_atom](double s) {
      Point p = base;
      p[s_atom] = s;
      return eval_numeric(rest, p);
    };
    out.eval = [closed, f](double s) { return closed(s) + integrate(f, 0.0, s, 1e-10); };
  }
  return out;
}

double lift_and_check(const PDESystem& pde, const LiftedProfiles& lifted, double c,
                      const LiftGrid& grid, const Bindings& params) {
  pde.check_evolution_form();
  const std::string& tn = pde.jet.independents[0];
  const std::string& xn = pde.jet.independents[1];
  const double h = grid.fd_step;
  auto value = [&](const std::string& dep, double t, double x) -> Complex {
    return lifted.profiles.at(dep)(x - c * t);
  };
  // Mixed derivative by nested stencils: t-order outer, x-order inner.
  auto derivative = [&](AtomRef a, double t, double x) -> Complex {
    int kt = static_cast<int>(std::count(a->derivs.begin(), a->derivs.end(), tn[0]));
    int kx = static_cast<int>(std::count(a->derivs.begin(), a->derivs.end(), xn[0]));
    const Stencil& st = stencil(kt);
    const Stencil& sx = stencil(kx);
    Complex sum = 0.0;
    for (int i = -st.half; i <= st.half; ++i) {
      double wt = st.w[i + st.half];
      if (wt == 0.0) continue;
      for (int j = -sx.half; j <= sx.half; ++j) {
        double wx = sx.w[j + sx.half];
        if (wx == 0.0) continue;
        sum += wt * wx * value(a->name, t + i * h, x + j * h);
      }
    }
    return sum / (std::pow(h, kt) * std::pow(h, kx));
  };
  for (const std::string& dep : pde.jet.dependents) {
    if (!lifted.profiles.count(dep)) throw DomainError("no lifted profile for " + dep);
  }
  double worst = 0.0;
  Point base = make_point(params);
  for (int i = 0; i < grid.nt; ++i) {
    double t = grid.t_min + (grid.t_max - grid.t_min) * i / std::max(1, grid.nt - 1);
    for (int j = 0; j < grid.nx; ++j) {
      double x = grid.x_min + (grid.x_max - grid.x_min) * j / std::max(1, grid.nx - 1);
      Point p = base;
      p[symbol_atom(tn)] = t;
      p[symbol_atom(xn)] = x;
      for (const Equation& eq : pde.equations) {
        for (AtomRef a : eq.rhs.atoms_deep()) {
          if (a->kind == AtomKind::kJet && !p.count(a)) p[a] = derivative(a, t, x);
        }
        Complex ut = derivative(jet_atom(eq.dependent, std::string(1, tn[0])), t, x);
        double r = std::abs(ut - eval_numeric(eq.rhs, p));
        if (!std::isfinite(r)) throw PoleError("lifted profile is singular on the grid");
        worst = std::max(worst, r);
      }
    }
  }
  return worst;
}

LiftedProfiles tan_branch_profiles(double c, double s0) {
  SolutionCandidate cand = tan_solution();
  Bindings params{{"c", c}, {"s0", s0}};
  LiftedProfiles out;
  out.profiles["v"] = antiderivative(cand.values.at("F"), params).eval;
  out.profiles["w"] = antiderivative(cand.values.at("G"), params).eval;
  return out;
}

// ---- series output --------------------------------------------------------------

void emit_series_csv(const std::vector<SeriesRow>& rows, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << "s,F_re,F_im,G_re,G_im\n";
  char buf[256];
  for (const SeriesRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", r.s, r.F.real(), r.F.imag(),
                  r.G.real(), r.G.imag());
    out << buf;
  }
  if (!out) throw Error("write failed for " + path);
}

std::vector<SeriesRow> series_from_trajectory(const Trajectory& t) {
  auto f = t.values.find("F");
  auto g = t.values.find("G");
  if (f == t.values.end() || g == t.values.end()) {
    throw DomainError("trajectory has no F and G components");
  }
  std::vector<SeriesRow> rows;
  for (std::size_t i = 0; i < t.s.size(); ++i) rows.push_back({t.s[i], f->second[i], g->second[i]});
  return rows;
}

std::vector<SeriesRow> sample_candidate(const SolutionCandidate& cand, const Bindings& params,
                                        double s_min, double s_max, int points) {
  std::vector<SeriesRow> rows;
  const Expr f = cand.values.count("F") ? cand.values.at("F") : Expr();
  const Expr g = cand.values.count("G") ? cand.values.at("G") : Expr();
  for (int i = 0; i < points; ++i) {
    double s = points == 1 ? s_min : s_min + (s_max - s_min) * i / (points - 1);
    rows.push_back({s, eval_candidate(f, s, params), eval_candidate(g, s, params)});
  }
  return rows;
}

std::vector<Fig1Series> fig1(double c, double f0, const std::vector<double>& f1_values,
                             const std::string& path, int points) {
  if (c == 0.0) throw DomainError("fig1 needs c != 0");
  if (points < 3 || points % 2 == 0) throw DomainError("fig1 needs an odd number of points >= 3");
  const double period = 2.0 * std::numbers::pi / std::abs(c);
  std::string stem = path;
  if (stem.size() > 4 && stem.substr(stem.size() - 4) == ".csv") stem.resize(stem.size() - 4);
  SolutionCandidate cand = s11_solution();
  std::vector<Fig1Series> out;
  for (double f1 : f1_values) {
    Fig1Series series;
    series.f1 = f1;
    series.path = stem + "_F1_" + format_value(f1) + ".csv";
    series.rows = sample_candidate(cand, {{"c", c}, {"F0", f0}, {"F1", f1}}, 0.0, 2.0 * period,
                                   points);
    emit_series_csv(series.rows, series.path);
    out.push_back(std::move(series));
  }
  return out;
}

namespace {

std::size_t period_shift(const std::vector<SeriesRow>& rows, double period) {
  if (rows.size() < 3) throw DomainError("series too short");
  double step = rows[1].s - rows[0].s;
  auto shift = static_cast<std::size_t>(std::llround(period / step));
  if (std::abs(shift * step - period) > 1e-9 * period || shift >= rows.size()) {
    throw DomainError("series grid is not aligned to the period");
  }
  return shift;
}

}  // namespace

int derivative_sign_changes(const std::vector<SeriesRow>& rows, double period) {
  std::size_t shift = period_shift(rows, period);
  int changes = 0;
  int last = 0;
  for (std::size_t i = 1; i + 1 < rows.size() && i <= shift; ++i) {
    double d = (rows[i + 1].F.real() - rows[i - 1].F.real()) / (rows[i + 1].s - rows[i - 1].s);
    int sign = d > 1e-12 ? 1 : (d < -1e-12 ? -1 : 0);
    if (sign == 0) continue;
    if (last != 0 && sign != last) ++changes;
    last = sign;
  }
  return changes;
}

double periodicity_defect(const std::vector<SeriesRow>& rows, double period) {
  std::size_t shift = period_shift(rows, period);
  double worst = 0.0;
  for (std::size_t i = 0; i + shift < rows.size(); ++i) {
    worst = std::max(worst, std::abs(rows[i + shift].F.real() - rows[i].F.real()));
    worst = std::max(worst, std::abs(rows[i + shift].G.real() - rows[i].G.real()));
  }
  return worst;
}

}  // namespace lieforge
