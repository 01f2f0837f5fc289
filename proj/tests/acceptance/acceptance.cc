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

// Acceptance checks, one PASS/FAIL line per criterion.

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>

#include "lieforge/hierarchy.h"
#include "lieforge/liealg.h"
#include "lieforge/parse.h"
#include "lieforge/reduce.h"
#include "lieforge/special_functions.h"
#include "lieforge/symmetry.h"
#include "random_expr.h"

namespace lieforge {
namespace {

/// Collects sub-check outcomes; the criterion passes when all do.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& what) { notes_.push_back(what); }
  [[nodiscard]] bool ok() const { return failures_.empty(); }
  [[nodiscard]] std::string detail() const {
    std::string d;
    for (const auto& f : failures_) d += (d.empty() ? "" : "; ") + f;
    for (const auto& n : notes_) d += (d.empty() ? "" : "; ") + n;
    return d;
  }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

void criterion1(Check& c) {
  auto t0 = std::chrono::steady_clock::now();
  for (int k = 1; k <= 3; ++k) {
    c.expect(audit_member(k).match, "member " + std::to_string(k) + " differs from catalogue");
  }
  c.expect(hierarchy_member(1) == parse_expr("-u_x^2 - I*u_xx", complex_pde_spec()),
           "complex second member");
  AuditReport r4 = audit_member(4);
  c.expect(!r4.match && !r4.items.empty(), "member 4 audit delta is empty");
  double s = seconds_since(t0);
  c.expect(s < 1.0, "runtime " + fmt(s) + " s");
  c.note("member 4 delta items: " + std::to_string(r4.items.size()));
}

void criterion2(Check& c) {
  auto t0 = std::chrono::steady_clock::now();
  PDESystem s = catalogue_member(2);
  DiscoveryResult r = discover_symmetries(s, make_ansatz(s.jet, {2, 0, 0, false}));
  c.expect(r.basis.size() == 7, "nullity " + std::to_string(r.basis.size()));
  for (const VectorField& x : catalogue_generators(2)) {
    c.expect(span_membership(x, r.basis).has_value(), x.label + " not in span");
    c.expect(verify_generator(s, x).status == ZeroStatus::kZero, x.label + " not Zero");
  }
  double secs = seconds_since(t0);
  c.expect(secs < 60.0, "runtime " + fmt(secs) + " s");
}

void criterion3(Check& c) {
  PDESystem s = catalogue_member(2);
  VerificationReport full = verify_generator(s, infinite_family(2));
  VerificationReport dropped = verify_generator(s, infinite_family(2, true));
  c.expect(full.status == ZeroStatus::kZero,
           std::string("a,b family under a_t=a_xx, b_t=b_xx is ") + to_string(full.status));
  c.expect(dropped.status == ZeroStatus::kNonzero, "negative control not Nonzero");
  c.note(std::string("coupled constraints a_t=b_xx, b_t=-a_xx give ") +
         to_string(verify_generator(s, coupled_member2_family()).status));
}

void criterion4(Check& c) {
  PDESystem s = catalogue_member(3);
  auto gens = catalogue_generators(3);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    ZeroStatus st = verify_generator(s, gens[i]).status;
    if (i == 1) {
      c.expect(st == ZeroStatus::kNonzero, "catalogue " + gens[i].label + " unexpectedly Zero");
      if (st == ZeroStatus::kNonzero) c.note("flagged: catalogue " + gens[i].label + " is Nonzero");
    } else {
      c.expect(st == ZeroStatus::kZero, gens[i].label + " not Zero");
    }
  }
  c.expect(verify_generator(s, member3_scaling()).status == ZeroStatus::kZero,
           "t d_t + (x/3) d_x not Zero");
  c.expect(verify_generator(s, infinite_family(3)).status == ZeroStatus::kZero,
           "c,d family not Zero");
}

void criterion5(Check& c) {
  PDESystem s = catalogue_member(4);
  DiscoveryResult r = discover_symmetries(s, make_ansatz(s.jet, {2, 2, 1, false}));
  c.expect(r.basis.size() == 4, "nullity " + std::to_string(r.basis.size()));
  for (const char* name : {"t", "x", "v", "w"}) {
    VectorField d = make_field(s.jet, {{name, "1"}});
    c.expect(span_membership(d, r.basis).has_value(), std::string("d_") + name + " not in span");
  }
  c.note("nullity " + std::to_string(r.basis.size()) + " in " + fmt(r.seconds) + " s");
}

void criterion6(Check& c) {
  StructureTable a = structure_constants(catalogue_generators(2));
  c.expect(a.is_closed(), "a-table not closed");
  c.expect(a.is_antisymmetric(), "a-table not antisymmetric");
  c.expect(a.is_closed() && jacobi_check(a), "a-table Jacobi");
  auto dis = compare_with_catalogue(a, catalogue_brackets("a"));
  c.expect(!dis.empty(), "no disagreements listed");
  c.note(std::to_string(dis.size()) + " disagreements with the catalogue a-table");

  StructureTable b = structure_constants(catalogue_generators(3));
  VectorField v57 = lie_bracket(b.basis[4], b.basis[6]);
  VectorField v56 = lie_bracket(b.basis[4], b.basis[5]);
  c.expect(v57 == Expr(-2) * b.basis[5], "[Γ5b,Γ7b] != -2Γ6b");
  c.expect(v56 == Expr(Rational(-1, 2)) * b.basis[6], "[Γ5b,Γ6b] != -Γ7b/2");
}

void criterion7(Check& c) {
  SolvedSystem d = solved_form(catalogue_ode("3.2"));
  for (const VectorField& x : catalogue_reduced_generators("d")) {
    c.expect(verify_generator(d, x).status == ZeroStatus::kZero, x.label + " not Zero on 3.2");
  }
  for (const VectorField& x : corrected_reduced_generators()) {
    c.note(x.label + " " + to_string(verify_generator(d, x).status));
  }
  SolvedSystem f = solved_form(catalogue_ode("3.20"));
  auto gf = catalogue_reduced_generators("f");
  for (const VectorField& x : gf) {
    c.expect(verify_generator(f, x).status == ZeroStatus::kZero, x.label + " not Zero on 3.20");
  }
  StructureTable sub = structure_constants({gf[2], gf[3], gf[4]});
  std::vector<CatalogueBracket> cat;
  for (CatalogueBracket e : catalogue_brackets("f")) {
    e.i -= 2;
    e.j -= 2;
    for (auto& [k, v] : e.value) k -= 2;
    cat.push_back(e);
  }
  c.expect(sub.is_closed() && compare_with_catalogue(sub, cat).empty(),
           "{3f,4f,5f} brackets differ from catalogue");
}

void criterion8(Check& c) {
  Expr cs = symbol("c");
  ODESystem r2 = travelling_wave_reduce(catalogue_member(2), cs).system;
  ODESystem r3 = travelling_wave_reduce(catalogue_member(3), cs).system;
  c.expect(equivalent_systems(r2, catalogue_ode("3.2")), "member 2 reduction != 3.2");
  c.expect(equivalent_systems(r3, catalogue_ode("3.20")), "member 3 reduction != 3.20");
  ODESystem o2 = order_reduce(r2);
  c.expect(equivalent_systems(o2, catalogue_ode("3.3")), "order reduction != 3.3");
  c.expect(equivalent_systems(order_reduce(r3), catalogue_ode("3.22")),
           "order reduction != 3.22 (sign of the c-terms)");
  Elimination el = eliminate_to_second_order(o2);
  c.expect(proportional(el.equation, catalogue_second_order()),
           "eliminated equation not proportional to catalogue second-order equation");
  c.note("eliminated: " + el.equation.str() + " = 0");
}

void criterion9(Check& c) {
  c.expect(verify_solution(catalogue_ode("3.3"), tan_solution(), VerifyMode::kSymbolic).status ==
               ZeroStatus::kZero,
           "tan branch not Zero");
  for (double f1 : {0.0, 1.0, 2.0}) {
    NumericOptions o;
    o.params = {{"c", 1.0}, {"F0", 1.0}, {"F1", f1}};
    SolutionReport r = verify_solution(catalogue_ode("3.3"), s11_solution(), VerifyMode::kNumeric, o);
    double worst = *std::max_element(r.max_abs.begin(), r.max_abs.end());
    c.expect(r.pass && r.samples == 200, "closed form F1=" + fmt(f1) + " residual " + fmt(worst));
  }
  {
    NumericOptions o;
    o.params = {{"c", 1.0}, {"G0", 0.5}, {"G1", 0.25}};
    SolutionReport r =
        verify_solution(catalogue_ode("3.22"), rational_trig_solution(), VerifyMode::kNumeric, o);
    double worst = *std::max_element(r.max_abs.begin(), r.max_abs.end());
    c.expect(r.pass, "rational-trig G residual " + fmt(worst));
  }
  {
    const double k = 0.9;
    NumericOptions o;
    o.params = {{"c", -(1 + k * k)}, {"F0", std::sqrt(2 * k * k)}, {"k", k}};
    o.tolerance = 1e-8;
    SolutionReport r = verify_solution(catalogue_ode("3.22"), sn_solution(), VerifyMode::kNumeric, o);
    c.expect(r.pass, "sn branch residual " + fmt(r.max_abs[0]));
  }
  c.expect(verify_solution(catalogue_ode("3.47"), linear_solution(), VerifyMode::kSymbolic).status ==
               ZeroStatus::kZero,
           "linear solution not Zero");
}

double rk4_error(double h) {
  Trajectory tr =
      integrate_rk4(catalogue_ode("3.3"), {{"F", 0.5}, {"G", 0.0}}, 0.0, 2.0, h, {{"c", 1.0}});
  double worst = 0;
  for (std::size_t i = 0; i < tr.s.size(); ++i) {
    worst = std::max(worst, std::abs(tr.values["G"][i] + 0.5 * std::tan(0.5 * tr.s[i])));
  }
  return tr.hit_pole ? INFINITY : worst;
}

void criterion10(Check& c) {
  double e = rk4_error(1e-3);
  c.expect(e < 1e-6, "RK4 error " + fmt(e));
  // At h = 1e-3 the error is at roundoff level; the ratio is taken one decade up.
  double ratio = rk4_error(1e-2) / rk4_error(5e-3);
  c.expect(ratio >= 12 && ratio <= 20, "halving ratio " + fmt(ratio));
  double lift = lift_and_check(catalogue_member(2), tan_branch_profiles(1.0, 0.0), 1.0);
  c.expect(lift < 1e-6, "lift residual " + fmt(lift));
  double worst = 0;
  const double k = 0.9;
  for (int i = 0; i <= 400; ++i) {
    double u = -5.0 + i * 0.025;
    auto j = numeric::jacobi_elliptic(u, k);
    double sn = jacobi_sn(u, k);
    worst = std::max(worst, std::abs(j.cn * j.cn * j.dn * j.dn - (1 - sn * sn) * (1 - k * k * sn * sn)));
  }
  c.expect(worst < 1e-10, "sn identity residual " + fmt(worst));
  c.note("RK4 error " + fmt(e) + ", ratio " + fmt(ratio) + ", lift " + fmt(lift));
}

void criterion11(Check& c) {
  auto dir = std::filesystem::temp_directory_path() / "lieforge_acceptance_fig1";
  std::filesystem::create_directories(dir);
  auto series = fig1(1.0, 1.0, {0.0, 1.0, 2.0}, (dir / "fig1.csv").string());
  const double period = 2 * std::numbers::pi;
  c.expect(series.size() == 3, "series count");
  for (const Fig1Series& s : series) {
    c.expect(std::filesystem::exists(s.path), s.path + " missing");
    double d = periodicity_defect(s.rows, period);
    c.expect(d < 1e-6, "F1=" + fmt(s.f1) + " periodicity defect " + fmt(d));
  }
  int sc0 = derivative_sign_changes(series[0].rows, period);
  int sc2 = derivative_sign_changes(series[2].rows, period);
  c.expect(sc2 > sc0, "sign changes F1=2: " + std::to_string(sc2) + ", F1=0: " + std::to_string(sc0));
  c.note("sign changes per period F1=0: " + std::to_string(sc0) + ", F1=2: " + std::to_string(sc2));
  std::filesystem::remove_all(dir);
}

void criterion12(Check& c) {
  auto tally = testing::run_property_suite(1000, default_seed());
  c.expect(tally.cases == 1000, "case count");
  c.expect(tally.idempotence == 0, std::to_string(tally.idempotence) + " idempotence failures");
  c.expect(tally.product_rule == 0, std::to_string(tally.product_rule) + " product-rule failures");
  c.expect(tally.roundtrip == 0, std::to_string(tally.roundtrip) + " roundtrip failures");
  c.expect(tally.zero_soundness == 0, std::to_string(tally.zero_soundness) + " equals_zero failures");
  if (!tally.first_failure.empty()) c.note(tally.first_failure);
}

const std::vector<std::pair<std::string, std::function<void(Check&)>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<void(Check&)>>> kAll{
      {"hierarchy goldens", criterion1},
      {"member-2 discovery", criterion2},
      {"member-2 infinite family", criterion3},
      {"member-3 generators", criterion4},
      {"member-4 discovery", criterion5},
      {"bracket tables", criterion6},
      {"reduced-system generators", criterion7},
      {"reductions", criterion8},
      {"closed-form solutions", criterion9},
      {"numerics", criterion10},
      {"fig1 series", criterion11},
      {"kernel properties", criterion12},
  };
  return kAll;
}

bool run_criterion(int n) {
  const auto& [name, body] = criteria()[n - 1];
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("threw: ") + e.what());
  }
  std::cout << "criterion " << n << " [" << name << "]: " << (c.ok() ? "PASS" : "FAIL") << " ("
            << fmt(seconds_since(t0)) << " s)";
  std::string d = c.detail();
  if (!d.empty()) std::cout << " -- " << d;
  std::cout << std::endl;
  return c.ok();
}

}  // namespace
}  // namespace lieforge

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks; prints one PASS/FAIL line per criterion."};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-12)")->check(CLI::Range(1, 12));
  CLI11_PARSE(app, argc, argv);
  bool all_ok = true;
  for (int n = 1; n <= 12; ++n) {
    if (only != 0 && n != only) continue;
    all_ok = lieforge::run_criterion(n) && all_ok;
  }
  return all_ok ? 0 : 1;
}
