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

#include "cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <ostream>
#include <sstream>

#include "lieforge/hierarchy.h"
#include "lieforge/liealg.h"
#include "lieforge/parse.h"
#include "lieforge/reduce.h"
#include "lieforge/symmetry.h"

namespace lieforge::cli {
namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json report(const std::string& command) {
  json j;
  j["schema"] = 1;
  j["command"] = command;
  return j;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

JetSpec parameter_spec() { return JetSpec{{}, {}, {"c"}, {}, 0}; }

json field_json(const VectorField& x) {
  json comps = json::object();
  for (const auto& [name, e] : x.components()) {
    if (!e.is_zero()) comps[name] = e.str();
  }
  json j;
  j["label"] = x.label;
  j["components"] = comps;
  return j;
}

json strings(const std::vector<Expr>& es) {
  json a = json::array();
  for (const Expr& e : es) a.push_back(e.str());
  return a;
}

PDESystem member_system(int k) {
  if (k < 1 || k > 4) throw UsageError("--member must be in 1..4");
  return catalogue_member(k);
}

const std::vector<std::string>& ode_names() {
  static const std::vector<std::string> kNames{"3.2", "3.3", "3.20", "3.22", "3.47"};
  return kNames;
}

ODESystem named_ode(const std::string& name) {
  auto& names = ode_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw UsageError("--system must be one of 3.2, 3.3, 3.20, 3.22, 3.47");
  }
  return catalogue_ode(name);
}

Expr with_c(const Expr& e, const Expr& c) {
  AtomRef c_atom = symbol_atom("c");
  return substitute_with(e, [&](AtomRef a) -> std::optional<Expr> {
    if (a == c_atom) return c;
    return std::nullopt;
  });
}

ODESystem with_c(ODESystem s, const Expr& c) {
  for (Expr& e : s.equations) e = with_c(e, c);
  return s;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("not a number list: " + text);
    }
  }
  if (out.empty()) throw UsageError("empty number list");
  return out;
}

std::pair<double, double> parse_range(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("range must look like a:b");
  auto a = parse_list(text.substr(0, colon));
  auto b = parse_list(text.substr(colon + 1));
  if (a.size() != 1 || b.size() != 1 || !(a[0] < b[0])) throw UsageError("bad range " + text);
  return {a[0], b[0]};
}

VectorField read_field(const std::string& path, const JetSpec& jet) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
  const json& comps = j.contains("components") ? j["components"] : j;
  std::map<std::string, std::string> m;
  for (const auto& [k, v] : comps.items()) {
    if (k == "label") continue;
    if (!v.is_string()) throw UsageError(path + ": component '" + k + "' must be a string");
    m[k] = v.get<std::string>();
  }
  std::string label = j.contains("label") && j["label"].is_string() ? j["label"].get<std::string>()
                                                                    : path;
  return make_field(jet, m, label);
}

// ---- subcommands ---------------------------------------------------------------

struct Globals {
  int threads = 1;
};

int cmd_member(std::ostream& out, int n, bool split, bool as_json) {
  if (n < 0) throw UsageError("--n must be >= 0");
  Expr rhs = hierarchy_member(n, std::max(n, kDefaultMaxMember));
  if (!as_json) {
    if (split) {
      PDESystem s = split_system(rhs, "member");
      for (const Equation& eq : s.equations) out << eq.dependent << "_t = " << eq.rhs.str() << "\n";
    } else {
      out << "u_t = " << rhs.str() << "\n";
    }
    return kExitOk;
  }
  json j = report("member");
  j["n"] = n;
  j["u_t"] = rhs.str();
  if (split) {
    auto [v, w] = complex_split(rhs);
    j["v_t"] = v.str();
    j["w_t"] = w.str();
  }
  emit(out, j);
  return kExitOk;
}

int cmd_audit(std::ostream& out, int k) {
  if (k < 1 || k > 4) throw UsageError("--k must be in 1..4");
  AuditReport r = audit_member(k);
  json j = report("audit");
  j["k"] = k;
  j["match"] = r.match;
  json delta = json::array();
  for (const AuditItem& item : r.items) {
    json d;
    d["equation"] = item.equation;
    d["monomial"] = item.monomial;
    d["generated"] = to_string(item.generated);
    d["catalogue"] = to_string(item.catalogue);
    delta.push_back(d);
  }
  j["delta"] = delta;
  j["generated"] = strings(r.generated);
  emit(out, j);
  return r.match ? kExitOk : kExitVerification;
}

struct SymmetryTarget {
  SolvedSystem solved;
  JetSpec jet;
  std::string name;
};

SymmetryTarget symmetry_target(int member, const std::string& system) {
  if (!system.empty()) {
    ODESystem s = named_ode(system);
    return {solved_form(s), s.jet, system};
  }
  PDESystem s = member_system(member);
  return {solved_form(s), s.jet, "member " + std::to_string(member)};
}

int cmd_find(std::ostream& out, const Globals& g, int member, const std::string& system,
             const AnsatzOptions& options) {
  if (options.degree < 0 || options.trig < 0 || options.expw < 0) {
    throw UsageError("ansatz sizes must be >= 0");
  }
  SymmetryTarget target = symmetry_target(member, system);
  AnsatzBasis basis = make_ansatz(target.jet, options);
  DiscoveryResult r = discover_symmetries(target.solved, basis, g.threads);
  json j = report("symmetries find");
  j["system"] = target.name;
  j["ansatz"] = {{"degree", options.degree},
                 {"trig", options.trig},
                 {"expw", options.expw},
                 {"functional_xi", options.functional_xi},
                 {"columns", basis.size()}};
  j["dimension"] = r.basis.size();
  j["rows"] = r.rows;
  j["rank"] = r.rank;
  json b = json::array();
  for (const VectorField& x : r.basis) b.push_back(field_json(x));
  j["basis"] = b;
  j["timings"] = {{"seconds", r.seconds}, {"threads", g.threads}};
  emit(out, j);
  return kExitOk;
}

json verification_json(const VerificationReport& r) {
  json j;
  j["label"] = r.label;
  j["status"] = to_string(r.status);
  j["remainder"] = strings(r.remainders);
  return j;
}

int cmd_verify(std::ostream& out, int member, const std::string& system, const std::string& field,
               bool catalogue, const std::string& family) {
  SymmetryTarget target = symmetry_target(member, system);
  std::vector<VectorField> fields;
  if (!field.empty()) fields.push_back(read_field(field, target.jet));
  if (catalogue) {
    std::vector<VectorField> cat;
    if (!system.empty()) {
      if (system == "3.2") cat = catalogue_reduced_generators("d");
      else if (system == "3.20") cat = catalogue_reduced_generators("f");
      else throw UsageError("no catalogue generators for system " + system);
    } else {
      if (member < 2) throw UsageError("no catalogue generators for member 1");
      cat = catalogue_generators(member);
      if (member == 3) cat.push_back(member3_scaling());
    }
    fields.insert(fields.end(), cat.begin(), cat.end());
  }
  if (!family.empty()) {
    if (!system.empty()) throw UsageError("--family needs --member");
    if (family == "catalogue") fields.push_back(infinite_family(member));
    else if (family == "drop") fields.push_back(infinite_family(member, true));
    else if (family == "coupled" && member == 2) fields.push_back(coupled_member2_family());
    else throw UsageError("--family must be catalogue, drop or coupled (member 2)");
  }
  if (fields.empty()) throw UsageError("give --field, --catalogue or --family");
  json results = json::array();
  bool all_zero = true;
  for (const VectorField& x : fields) {
    VerificationReport r = verify_generator(target.solved, x);
    all_zero = all_zero && r.is_zero();
    results.push_back(verification_json(r));
  }
  json j = report("symmetries verify");
  j["system"] = target.name;
  if (results.size() == 1) {
    j["status"] = results[0]["status"];
    j["remainder"] = results[0]["remainder"];
  } else {
    j["status"] = all_zero ? "Zero" : "Nonzero";
  }
  j["fields"] = results;
  emit(out, j);
  return all_zero ? kExitOk : kExitVerification;
}

std::vector<VectorField> bracket_basis(int member, bool reduced, std::string& family) {
  if (!reduced) {
    if (member < 2 || member > 4) throw UsageError("--member must be in 2..4");
    family = member == 2 ? "a" : (member == 3 ? "b" : "c");
    return catalogue_generators(member);
  }
  if (member == 2) family = "d";
  else if (member == 3) family = "f";
  else if (member == 4) family = "j";
  else throw UsageError("--reduced needs --member in 2..4");
  return catalogue_reduced_generators(family);
}

json signature_json(const AlgebraSignature& s) {
  json j;
  j["dimension"] = s.dimension;
  j["derived_series"] = s.derived_series;
  j["lower_central_series"] = s.lower_central_series;
  j["center"] = s.center;
  j["abelian"] = s.abelian;
  j["nilpotent"] = s.nilpotent;
  j["solvable"] = s.solvable;
  j["abelian_summand"] = s.abelian_summand;
  return j;
}

std::string describe(const AlgebraSignature& s) {
  if (s.abelian) return std::to_string(s.dimension) + "-dimensional abelian";
  std::string kind = s.nilpotent ? "nilpotent" : (s.solvable ? "solvable" : "non-solvable");
  std::string d = std::to_string(s.dimension) + "-dimensional " + kind;
  if (s.abelian_summand > 0) {
    d += " with " + std::to_string(s.abelian_summand) + " abelian direct summand(s)";
  }
  if (!s.solvable && s.derived_series.size() >= 1 && s.derived_series.back() == 3) {
    d += "; perfect 3-dimensional derived algebra";
  }
  return d;
}

int cmd_brackets(std::ostream& out, const Globals& g, int member, bool reduced, bool classify_only) {
  std::string family;
  std::vector<VectorField> basis = bracket_basis(member, reduced, family);
  StructureTable t = structure_constants(basis, g.threads);
  bool closed = t.is_closed();
  bool antisymmetric = t.is_antisymmetric();
  bool jacobi = closed && jacobi_check(t);
  json j = report(classify_only ? "classify" : "brackets");
  j["member"] = member;
  j["reduced"] = reduced;
  j["closed"] = closed;
  if (closed) {
    AlgebraSignature s = algebra_signature(t);
    j["signature"] = signature_json(s);
    j["description"] = describe(s);
  } else {
    j["signature"] = nullptr;
    j["description"] = "not closed under brackets";
  }
  if (classify_only) {
    emit(out, j);
    return kExitOk;
  }
  json b = json::array();
  for (const VectorField& x : basis) b.push_back(field_json(x));
  j["basis"] = b;
  json table = json::array();
  for (std::size_t i = 0; i < t.dim(); ++i) {
    for (std::size_t k = i + 1; k < t.dim(); ++k) {
      json e;
      e["i"] = i + 1;
      e["j"] = k + 1;
      e["closed"] = static_cast<bool>(t.closed[i][k]);
      if (t.closed[i][k]) {
        e["bracket"] = combination_str(t.c[i][k]);
      } else {
        e["bracket"] = nullptr;
        e["field"] = field_json(t.brackets[i][k]);
      }
      table.push_back(e);
    }
  }
  j["table"] = table;
  j["antisymmetric"] = antisymmetric;
  j["jacobi"] = jacobi;
  if (family != "c" && family != "d" && family != "j") {
    json dis = json::array();
    for (const BracketDisagreement& d : compare_with_catalogue(t, catalogue_brackets(family))) {
      dis.push_back({{"i", d.i},
                     {"j", d.j},
                     {"computed", d.computed.empty() ? json(nullptr) : json(combination_str(d.computed))},
                     {"catalogue", combination_str(d.catalogue)}});
    }
    j["catalogue_disagreements"] = dis;
  }
  emit(out, j);
  return antisymmetric && (!closed || jacobi) ? kExitOk : kExitVerification;
}

int cmd_reduce(std::ostream& out, int member, const std::string& c_text, bool order, bool eliminate,
               bool as_json) {
  PDESystem pde = member_system(member);
  Expr c = parse_expr(c_text, parameter_spec());
  Reduction r = travelling_wave_reduce(pde, c);
  ODESystem sys = r.system;
  if (order || eliminate) sys = order_reduce(sys);
  std::string cat;
  if (member == 2) cat = order || eliminate ? "3.3" : "3.2";
  if (member == 3) cat = order ? "3.22" : "3.20";
  if (member == 4 && !order) cat = "3.47";
  std::optional<bool> matches;
  if (!cat.empty() && !eliminate) matches = equivalent_systems(sys, with_c(catalogue_ode(cat), c));

  json j = report("reduce");
  j["member"] = member;
  j["c"] = c.str();
  j["order_reduced"] = order || eliminate;
  j["equations"] = strings(sys.equations);
  j["assumptions"] = strings(r.assumptions);
  if (matches) {
    j["catalogue"] = cat;
    j["matches_catalogue"] = *matches;
  }
  if (eliminate) {
    if (member != 2) throw UsageError("--eliminate applies to member 2");
    try {
      Elimination e = eliminate_to_second_order(sys);
      bool prop = proportional(e.equation, with_c(catalogue_second_order(), c));
      j["elimination"] = {{"G", e.g_expression.str()},
                          {"equation", e.equation.str()},
                          {"matches_catalogue", prop}};
    } catch (const DegeneratePivotError& e) {
      j["elimination"] = {{"error", e.what()}};
    }
  }
  if (as_json) {
    emit(out, j);
  } else {
    for (const Expr& e : sys.equations) out << e.str() << " = 0\n";
    for (const Expr& a : r.assumptions) out << "# assuming " << a.str() << " != 0\n";
    if (matches) out << "# catalogue " << cat << ": " << (*matches ? "match" : "mismatch") << "\n";
    if (j.contains("elimination")) {
      const json& e = j["elimination"];
      if (e.contains("error")) {
        out << "# elimination: " << e["error"].get<std::string>() << "\n";
      } else {
        out << "# G = " << e["G"].get<std::string>() << "\n"
            << e["equation"].get<std::string>() << " = 0\n"
            << "# catalogue second-order equation: "
            << (e["matches_catalogue"].get<bool>() ? "match" : "mismatch") << "\n";
      }
    }
  }
  return kExitOk;
}

struct SolutionParams {
  double c = 1.0, s0 = 0.0, F0 = 1.0, F1 = 0.0, G0 = 0.5, G1 = 0.25, k = 0.9;
  double f0 = 0.0, f1 = -1.0, g0 = 0.0;
};

SolutionCandidate named_candidate(const std::string& name, std::string& default_system) {
  if (name == "tan") {
    default_system = "3.3";
    return tan_solution();
  }
  if (name == "s11") {
    default_system = "3.3";
    return s11_solution();
  }
  if (name == "rational-trig") {
    default_system = "3.22";
    return rational_trig_solution();
  }
  if (name == "sn") {
    default_system = "3.22";
    return sn_solution();
  }
  if (name == "linear") {
    default_system = "3.47";
    return linear_solution();
  }
  throw UsageError("--solution must be tan, s11, rational-trig, sn or linear");
}

Bindings bindings_for(const std::string& name, const SolutionParams& p) {
  if (name == "tan") return {{"c", p.c}, {"s0", p.s0}};
  if (name == "s11") return {{"c", p.c}, {"F0", p.F0}, {"F1", p.F1}};
  if (name == "rational-trig") return {{"c", p.c}, {"G0", p.G0}, {"G1", p.G1}};
  if (name == "sn") {
    return {{"c", -(1.0 + p.k * p.k)}, {"F0", std::sqrt(2.0) * p.k}, {"k", p.k}};
  }
  return {{"c", p.c}, {"f0", p.f0}, {"f1", p.f1}, {"g0", p.g0}};
}

json bindings_json(const Bindings& b) {
  json j = json::object();
  for (const auto& [k, v] : b) j[k] = v.real();
  return j;
}

int cmd_verify_solution(std::ostream& out, const std::string& system_name,
                        const std::string& solution, const std::string& mode_text,
                        const SolutionParams& p, int samples, std::optional<double> tol,
                        const std::string& range) {
  std::string default_system;
  SolutionCandidate cand = named_candidate(solution, default_system);
  ODESystem sys = named_ode(system_name.empty() ? default_system : system_name);
  VerifyMode mode;
  if (mode_text == "auto") {
    mode = solution == "tan" || solution == "linear" ? VerifyMode::kSymbolic : VerifyMode::kNumeric;
  } else if (mode_text == "symbolic") {
    mode = VerifyMode::kSymbolic;
  } else if (mode_text == "numeric") {
    mode = VerifyMode::kNumeric;
  } else {
    throw UsageError("--mode must be auto, symbolic or numeric");
  }
  NumericOptions options;
  options.params = bindings_for(solution, p);
  options.samples = samples;
  options.tolerance = tol.value_or(solution == "sn" ? 1e-8 : 1e-9);
  if (!(options.tolerance > 0)) throw UsageError("--tol must be > 0");
  if (samples <= 0) throw UsageError("--samples must be > 0");
  if (!range.empty()) std::tie(options.s_min, options.s_max) = parse_range(range);
  SolutionReport r = verify_solution(sys, cand, mode, options);

  json j = report("verify-solution");
  j["system"] = sys.label;
  j["solution"] = cand.name;
  j["mode"] = mode == VerifyMode::kSymbolic ? "symbolic" : "numeric";
  json values = json::object();
  for (const auto& [dep, e] : cand.values) values[dep] = e.str();
  j["values"] = values;
  j["constraints"] = strings(cand.constraints);
  if (mode == VerifyMode::kNumeric) {
    j["params"] = bindings_json(options.params);
    j["samples"] = r.samples;
    j["tolerance"] = options.tolerance;
    j["max_abs"] = r.max_abs;
  } else {
    j["residuals"] = strings(r.residuals);
  }
  j["status"] = to_string(r.status);
  j["pass"] = r.pass;
  if (!r.unchecked.empty()) {
    j["unchecked"] = strings(r.unchecked);
    if (mode == VerifyMode::kNumeric) {
      json mags = json::array();
      for (const Expr& e : r.unchecked) {
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
          double s = options.s_min + (options.s_max - options.s_min) * (i + 0.5) / 20;
          try {
            worst = std::max(worst, std::abs(eval_candidate(e, s, options.params)));
          } catch (const PoleError&) {
          }
        }
        mags.push_back(worst);
      }
      j["unchecked_max_abs"] = mags;
    }
  }
  j["notes"] = cand.notes;
  emit(out, j);
  return r.pass ? kExitOk : kExitVerification;
}

std::map<std::string, Complex> parse_init(const std::string& text) {
  std::map<std::string, Complex> init;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--init entries look like F=0.5");
    init[item.substr(0, eq)] = parse_list(item.substr(eq + 1))[0];
  }
  return init;
}

int cmd_integrate(std::ostream& out, const std::string& system_name, const std::string& from,
                  const std::string& init_text, const SolutionParams& p, double h,
                  const std::string& range, const std::string& csv) {
  ODESystem sys = named_ode(system_name);
  auto [a, b] = parse_range(range);
  if (!(h > 0)) throw UsageError("--h must be > 0");
  SolvedSystem solved = solved_form(sys);
  std::optional<SolutionCandidate> cand;
  Bindings params{{"c", p.c}};
  std::map<std::string, Complex> init;
  if (!from.empty()) {
    std::string unused;
    cand = named_candidate(from, unused);
    params = bindings_for(from, p);
    for (const PrincipalRule& rule : solved.rules) {
      Expr v = cand->values.at(rule.lead->name);
      for (int k = 0; k < rule.lead->order(); ++k) {
        init[to_string(jet_atom(rule.lead->name, std::string(k, 's')))] =
            eval_candidate(v, a, params);
        v = total_derivative(v, 's');
      }
    }
  }
  if (!init_text.empty()) {
    for (const auto& [k, v] : parse_init(init_text)) init[k] = v;
  }
  if (init.empty()) throw UsageError("give --from or --init");
  Trajectory tr = integrate_rk4(sys, init, a, b, h, params);

  json j = report("integrate");
  j["system"] = sys.label;
  j["method"] = tr.method;
  j["h"] = h;
  j["range"] = {a, b};
  j["params"] = bindings_json(params);
  j["steps"] = tr.s.empty() ? 0 : tr.s.size() - 1;
  j["hit_pole"] = tr.hit_pole;
  if (cand) {
    double worst = 0.0;
    for (const auto& [name, series] : tr.values) {
      if (!cand->values.count(name)) continue;
      for (std::size_t i = 0; i < series.size(); ++i) {
        Complex exact = eval_candidate(cand->values.at(name), tr.s[i], params);
        worst = std::max(worst, std::abs(series[i] - exact));
      }
    }
    j["from"] = cand->name;
    j["max_error"] = worst;
  }
  json final_values = json::object();
  for (const auto& [name, series] : tr.values) {
    final_values[name] = {series.back().real(), series.back().imag()};
  }
  j["final"] = final_values;
  if (!csv.empty()) {
    emit_series_csv(series_from_trajectory(tr), csv);
    j["csv"] = csv;
  }
  emit(out, j);
  return kExitOk;
}

int cmd_fig1(std::ostream& out, double c, double f0, const std::string& f1_text,
             const std::string& csv, int points) {
  if (points < 3 || points % 2 == 0) throw UsageError("--points must be odd and >= 3");
  if (c == 0.0) throw UsageError("--c must be nonzero");
  std::vector<double> f1 = parse_list(f1_text);
  double period = 2.0 * std::numbers::pi / std::abs(c);
  auto series = fig1(c, f0, f1, csv, points);
  json j = report("fig1");
  j["c"] = c;
  j["F0"] = f0;
  j["period"] = period;
  json list = json::array();
  for (const Fig1Series& s : series) {
    list.push_back({{"F1", s.f1},
                    {"path", s.path},
                    {"rows", s.rows.size()},
                    {"periodicity_defect", periodicity_defect(s.rows, period)},
                    {"sign_changes", derivative_sign_changes(s.rows, period)}});
  }
  j["series"] = list;
  emit(out, j);
  return kExitOk;
}

void apply_seed() {
  const char* env = std::getenv("LIEFORGE_SEED");
  if (env == nullptr || *env == '\0') {
    set_default_seed(42);
    return;
  }
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(env, &used);
    if (env[used] != '\0') throw std::invalid_argument(env);
    set_default_seed(v);
  } catch (const std::exception&) {
    throw UsageError(std::string("LIEFORGE_SEED is not an unsigned integer: ") + env);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symbolic Lie point symmetries of a complex Burgers hierarchy: generation, "
               "symmetry discovery, brackets, travelling-wave reductions and solutions.",
               "lieforge"};
  app.require_subcommand(1);
  app.footer(
      "Subcommand map:\n"
      "  member, audit          hierarchy generation and catalogue audit\n"
      "  symmetries find        determining equations over an ansatz dictionary\n"
      "  symmetries verify      prolongation check of given or catalogue fields\n"
      "  brackets, classify     structure constants and algebra signature\n"
      "  reduce                 travelling-wave and order reduction, elimination\n"
      "  verify-solution        closed-form solutions of the reduced systems\n"
      "  integrate              RK4 integration of a reduced system\n"
      "  fig1                   periodic profiles of the closed-form F\n"
      "Environment: LIEFORGE_SEED sets the seed of probabilistic zero tests (default 42).\n"
      "Exit codes: 0 ok, 1 usage error, 2 verification failure.");
  Globals g;
  app.add_option("--threads", g.threads, "Worker threads for determining systems and brackets")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  int n = 1;
  bool split = false, member_json = false;
  auto* member = app.add_subcommand("member", "Print hierarchy member n (u_t = L^n P(...))");
  member->add_option("--n", n, "Power of the recursion operator")->required();
  member->add_flag("--split", split, "Print the real system in v, w");
  member->add_flag("--json", member_json, "Emit JSON");

  int k = 1;
  auto* audit = app.add_subcommand("audit", "Compare a generated member with the catalogue");
  audit->add_option("--k", k, "Member 1..4")->required();

  auto* sym = app.add_subcommand("symmetries", "Lie point symmetries");
  sym->require_subcommand(1);
  int sym_member = 2;
  std::string sym_system;
  AnsatzOptions ansatz;
  auto* find = sym->add_subcommand("find", "Solve the determining equations over an ansatz");
  find->add_option("--member", sym_member, "Catalogue member 1..4")->capture_default_str();
  find->add_option("--system", sym_system, "Reduced ODE system instead (3.2, 3.20, ...)");
  find->add_option("--degree", ansatz.degree, "Polynomial degree D")->capture_default_str();
  find->add_option("--trig", ansatz.trig, "Trigonometric order M")->capture_default_str();
  find->add_option("--expw", ansatz.expw, "Exponential order K")->capture_default_str();
  find->add_flag("--functional-xi", ansatz.functional_xi,
                 "Use the trig/exp dictionary on the independent slots too");
  std::string field_path, family;
  bool with_catalogue = false;
  auto* verify = sym->add_subcommand("verify", "Verify candidate generators");
  verify->add_option("--member", sym_member, "Catalogue member 1..4")->capture_default_str();
  verify->add_option("--system", sym_system, "Reduced ODE system instead (3.2, 3.20, ...)");
  verify->add_option("--field", field_path, "JSON file: {\"label\": ..., \"components\": {...}}");
  verify->add_flag("--catalogue", with_catalogue, "Verify the catalogue generators");
  verify->add_option("--family", family, "Infinite family: catalogue, drop or coupled");

  int br_member = 2;
  bool reduced = false;
  auto* brackets = app.add_subcommand("brackets", "Structure constants of a catalogue basis");
  brackets->add_option("--member", br_member, "Member 2..4")->capture_default_str();
  brackets->add_flag("--reduced", reduced, "Use the generators of the reduced system");
  auto* classify = app.add_subcommand("classify", "Algebra signature of a catalogue basis");
  classify->add_option("--member", br_member, "Member 2..4")->capture_default_str();
  classify->add_flag("--reduced", reduced, "Use the generators of the reduced system");

  int red_member = 2;
  std::string c_text = "c";
  bool order = false, eliminate = false, red_json = false;
  auto* reduce = app.add_subcommand("reduce", "Travelling-wave reduction along d_t + c d_x");
  reduce->add_option("--member", red_member, "Member 1..4")->capture_default_str();
  reduce->add_option("--c", c_text, "Wave speed (number or expression in c)")->capture_default_str();
  reduce->add_flag("--order-reduce", order, "Substitute F = f', G = g'");
  reduce->add_flag("--eliminate", eliminate, "Eliminate G (member 2, implies --order-reduce)");
  reduce->add_flag("--json", red_json, "Emit JSON");

  SolutionParams params;
  auto add_params = [&](CLI::App* cmd) {
    cmd->add_option("--c", params.c, "Wave speed")->capture_default_str();
    cmd->add_option("--s0", params.s0, "tan branch shift")->capture_default_str();
    cmd->add_option("--F0", params.F0)->capture_default_str();
    cmd->add_option("--F1", params.F1)->capture_default_str();
    cmd->add_option("--G0", params.G0)->capture_default_str();
    cmd->add_option("--G1", params.G1)->capture_default_str();
    cmd->add_option("--k", params.k, "Elliptic modulus (sn fixes c and F0 from it)")
        ->capture_default_str();
    cmd->add_option("--f0", params.f0)->capture_default_str();
    cmd->add_option("--f1", params.f1)->capture_default_str();
    cmd->add_option("--g0", params.g0)->capture_default_str();
  };
  std::string system_name, solution, mode = "auto", range;
  int samples = 200;
  std::optional<double> tol;
  auto* vs = app.add_subcommand("verify-solution", "Substitute a closed form into a system");
  vs->add_option("--system", system_name, "3.3, 3.22 or 3.47 (default per solution)");
  vs->add_option("--solution", solution, "tan, s11, rational-trig, sn or linear")->required();
  vs->add_option("--mode", mode, "auto, symbolic or numeric")->capture_default_str();
  vs->add_option("--samples", samples)->capture_default_str();
  vs->add_option("--tol", tol, "Numeric tolerance (1e-9; sn 1e-8)");
  vs->add_option("--range", range, "Sample interval a:b (default 0:4)");
  add_params(vs);

  std::string from, init_text, csv;
  double h = 1e-3;
  std::string int_range = "0:2";
  auto* integ = app.add_subcommand("integrate", "RK4 integration of a reduced system");
  integ->add_option("--system", system_name, "3.3, 3.22, ...")->required();
  integ->add_option("--from", from, "Initial data from a closed form (tan, s11, ...)");
  integ->add_option("--init", init_text, "Initial data, e.g. F=0.5,G=0");
  integ->set_help_flag("--help", "Print this help message and exit");
  integ->add_option("--h", h, "Step size")->capture_default_str();
  integ->add_option("--range", int_range)->capture_default_str();
  integ->add_option("--csv", csv, "Write s,F_re,F_im,G_re,G_im");
  add_params(integ);

  double fig_c = 1.0, fig_f0 = 1.0;
  std::string fig_f1 = "0,1,2", fig_csv = "fig1.csv";
  int points = 2001;
  auto* fig = app.add_subcommand("fig1", "Closed-form F over two periods for several F1");
  fig->add_option("--c", fig_c)->capture_default_str();
  fig->add_option("--F0", fig_f0)->capture_default_str();
  fig->add_option("--F1", fig_f1, "Comma-separated values")->capture_default_str();
  fig->add_option("--csv", fig_csv, "Path stem; one file per F1 value")->capture_default_str();
  fig->add_option("--points", points, "Samples per series (odd)")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    apply_seed();
    if (member->parsed()) return cmd_member(out, n, split, member_json);
    if (audit->parsed()) return cmd_audit(out, k);
    if (find->parsed()) return cmd_find(out, g, sym_member, sym_system, ansatz);
    if (verify->parsed()) {
      return cmd_verify(out, sym_member, sym_system, field_path, with_catalogue, family);
    }
    if (brackets->parsed()) return cmd_brackets(out, g, br_member, reduced, false);
    if (classify->parsed()) return cmd_brackets(out, g, br_member, reduced, true);
    if (reduce->parsed()) return cmd_reduce(out, red_member, c_text, order, eliminate, red_json);
    if (vs->parsed()) {
      return cmd_verify_solution(out, system_name, solution, mode, params, samples, tol, range);
    }
    if (integ->parsed()) {
      return cmd_integrate(out, system_name, from, init_text, params, h, int_range, csv);
    }
    if (fig->parsed()) return cmd_fig1(out, fig_c, fig_f0, fig_f1, fig_csv, points);
  } catch (const UsageError& e) {
    err << "lieforge: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "lieforge: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "lieforge: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "lieforge: " << e.what() << "\n";
    return kExitVerification;
  }
  return kExitUsage;
}

}  // namespace lieforge::cli
