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

#include "lieforge/symmetry.h"

#include <algorithm>
#include <chrono>
#include <memory>
#include <unordered_map>

#include "lieforge/parallel.h"
#include "lieforge/parse.h"

namespace lieforge {
namespace {

Expr lookup(const std::map<std::string, Expr>& m, const std::string& key) {
  auto it = m.find(key);
  return it == m.end() ? Expr() : it->second;
}

void drop_zeros(std::map<std::string, Expr>& m) {
  std::erase_if(m, [](const auto& kv) { return kv.second.is_zero(); });
}

// Sum over independents of xi^i * a_i for an unknown-function atom.
Expr unknown_chain(const VectorField& x, AtomRef a) {
  Expr r;
  for (const std::string& i : x.jet.independents) {
    Expr xi = x.xi_of(i);
    if (!xi.is_zero()) r += xi * Expr::from_atom(extend_derivative(a, i[0]));
  }
  return r;
}

std::vector<Expr> residual_with(const std::vector<PrincipalRule>& rules, const VectorField& x,
                                Normalizer& nf) {
  Prolongation pr(x, &nf);
  std::vector<Expr> out;
  out.reserve(rules.size());
  for (const PrincipalRule& rule : rules) {
    Expr lhs = pr.coefficient(rule.lead);
    Expr rhs = derivation(rule.phi, [&](AtomRef a) -> Expr {
      switch (a->kind) {
        case AtomKind::kSymbol:
          return x.jet.is_independent(a->name) ? x.xi_of(a->name) : Expr();
        case AtomKind::kJet:
          return pr.coefficient(a);
        case AtomKind::kUnknown:
          return unknown_chain(x, a);
        default:
          return Expr();
      }
    });
    out.push_back(nf.normalize(lhs - rhs));
  }
  return out;
}

std::vector<PrincipalRule> with_constraints(const SolvedSystem& s, const VectorField& x) {
  std::vector<PrincipalRule> rules = s.rules;
  rules.insert(rules.end(), x.constraints.begin(), x.constraints.end());
  return rules;
}

ZeroStatus combine(ZeroStatus a, ZeroStatus b) {
  if (a == ZeroStatus::kNonzero || b == ZeroStatus::kNonzero) return ZeroStatus::kNonzero;
  if (a == ZeroStatus::kProbablyZero || b == ZeroStatus::kProbablyZero) {
    return ZeroStatus::kProbablyZero;
  }
  return ZeroStatus::kZero;
}

VectorField slot_field(const JetSpec& jet, const AnsatzColumn& col) {
  VectorField f;
  f.jet = jet;
  if (jet.is_independent(col.slot)) {
    f.xi[col.slot] = col.basis;
  } else {
    f.eta[col.slot] = col.basis;
  }
  return f;
}

bool is_parameter_atom(const JetSpec& jet, AtomRef a) {
  return a->kind == AtomKind::kRoot ||
         (a->kind == AtomKind::kSymbol && jet.is_parameter(a->name));
}

struct RowKey {
  std::size_t equation;
  Monomial monomial;
  friend bool operator==(const RowKey&, const RowKey&) = default;
};

struct RowKeyHash {
  std::size_t operator()(const RowKey& k) const noexcept {
    return k.monomial.hash() * 31 + k.equation;
  }
};

}  // namespace

// ---- VectorField -------------------------------------------------------------

Expr VectorField::xi_of(const std::string& var) const { return lookup(xi, var); }

Expr VectorField::eta_of(const std::string& dep) const { return lookup(eta, dep); }

std::vector<std::pair<std::string, Expr>> VectorField::components() const {
  std::vector<std::pair<std::string, Expr>> out;
  for (const std::string& i : jet.independents) out.emplace_back(i, xi_of(i));
  for (const std::string& a : jet.dependents) out.emplace_back(a, eta_of(a));
  return out;
}

Expr VectorField::component(const std::string& name) const {
  if (jet.is_independent(name)) return xi_of(name);
  if (jet.is_dependent(name)) return eta_of(name);
  throw DomainError("'" + name + "' is neither an independent nor a dependent variable");
}

bool VectorField::is_zero() const {
  for (const auto& [name, e] : components()) {
    if (!e.is_zero()) return false;
  }
  return true;
}

std::string VectorField::str() const {
  std::string out;
  for (const auto& [name, e] : components()) {
    if (e.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + e.str() + ")*d_" + name;
  }
  return out.empty() ? "0" : out;
}

void VectorField::check() const {
  for (const auto& [k, v] : xi) {
    if (!jet.is_independent(k)) throw DomainError("xi keyed by non-independent '" + k + "'");
  }
  for (const auto& [k, v] : eta) {
    if (!jet.is_dependent(k)) throw DomainError("eta keyed by non-dependent '" + k + "'");
  }
  for (const auto& [name, e] : components()) {
    for (AtomRef a : e.atoms_deep()) {
      if (a->kind == AtomKind::kJet && !a->derivs.empty()) {
        throw DomainError("coefficient of d_" + name + " contains derivative coordinate " +
                          to_string(a));
      }
      if (a->kind == AtomKind::kUnknown && !a->derivs.empty()) {
        throw DomainError("coefficient of d_" + name + " contains derivative " + to_string(a));
      }
    }
  }
}

VectorField make_field(const JetSpec& jet, const std::map<std::string, std::string>& components,
                       std::string label) {
  VectorField f;
  f.jet = jet;
  f.label = std::move(label);
  for (const auto& [name, text] : components) {
    Expr e = parse_expr(text, jet);
    if (jet.is_independent(name)) {
      f.xi[name] = e;
    } else if (jet.is_dependent(name)) {
      f.eta[name] = e;
    } else {
      throw DomainError("unknown component '" + name + "'");
    }
  }
  drop_zeros(f.xi);
  drop_zeros(f.eta);
  f.check();
  return f;
}

VectorField operator+(const VectorField& a, const VectorField& b) {
  VectorField r = a;
  r.label.clear();
  for (const auto& [k, v] : b.xi) r.xi[k] = r.xi_of(k) + v;
  for (const auto& [k, v] : b.eta) r.eta[k] = r.eta_of(k) + v;
  for (const PrincipalRule& c : b.constraints) {
    bool dup = std::any_of(r.constraints.begin(), r.constraints.end(),
                           [&](const PrincipalRule& o) { return o.lead == c.lead; });
    if (!dup) r.constraints.push_back(c);
  }
  for (const std::string& u : b.jet.unknowns) {
    if (!r.jet.is_unknown(u)) r.jet.unknowns.push_back(u);
  }
  drop_zeros(r.xi);
  drop_zeros(r.eta);
  return r;
}

VectorField operator*(const Expr& k, const VectorField& a) {
  VectorField r = a;
  r.label.clear();
  for (auto& [name, v] : r.xi) v = k * v;
  for (auto& [name, v] : r.eta) v = k * v;
  drop_zeros(r.xi);
  drop_zeros(r.eta);
  return r;
}

bool operator==(const VectorField& a, const VectorField& b) {
  auto ca = a.components();
  auto cb = b.components();
  if (ca.size() != cb.size()) return false;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i].first != cb[i].first || ca[i].second != cb[i].second) return false;
  }
  return true;
}

Expr apply_field(const VectorField& x, const Expr& f) {
  return derivation(f, [&](AtomRef a) -> Expr {
    switch (a->kind) {
      case AtomKind::kSymbol:
        return x.jet.is_independent(a->name) ? x.xi_of(a->name) : Expr();
      case AtomKind::kJet:
        if (!a->derivs.empty()) {
          throw DerivativeError("field applied to a function of derivative coordinate " +
                                to_string(a));
        }
        return x.eta_of(a->name);
      case AtomKind::kUnknown:
        return unknown_chain(x, a);
      default:
        return Expr();
    }
  });
}

// ---- prolongation ------------------------------------------------------------

Prolongation::Prolongation(const VectorField& x, Normalizer* nf) : x_(x), nf_(nf) {}

Expr Prolongation::coefficient(AtomRef a) {
  if (a->kind != AtomKind::kJet) {
    throw DomainError("extended coefficient requested for non-jet atom " + to_string(a));
  }
  auto it = memo_.find(a);
  if (it != memo_.end()) return it->second;
  Expr r;
  if (a->derivs.empty()) {
    r = x_.eta_of(a->name);
  } else {
    char i = a->derivs.back();
    AtomRef parent = jet_atom(a->name, a->derivs.substr(0, a->derivs.size() - 1));
    r = total_derivative(coefficient(parent), i);
    for (const std::string& j : x_.jet.independents) {
      Expr dxi = total_derivative(x_.xi_of(j), i);
      if (!dxi.is_zero()) r -= dxi * Expr::from_atom(extend_derivative(parent, j[0]));
    }
  }
  if (nf_ != nullptr) r = nf_->normalize(r);
  memo_.emplace(a, r);
  return r;
}

std::map<AtomRef, Expr> prolong_generator(const VectorField& x, int order) {
  if (order < 1) throw DomainError("prolongation order must be at least 1");
  x.check();
  std::vector<char> vars;
  for (const std::string& i : x.jet.independents) vars.push_back(i[0]);
  std::sort(vars.begin(), vars.end());
  // Sorted multi-indices of each order, built by appending letters >= the last.
  std::vector<std::string> indices;
  std::vector<std::string> frontier{""};
  for (int n = 1; n <= order; ++n) {
    std::vector<std::string> next;
    for (const std::string& p : frontier) {
      for (char v : vars) {
        if (!p.empty() && v < p.back()) continue;
        next.push_back(p + v);
      }
    }
    indices.insert(indices.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  Prolongation pr(x, nullptr);
  std::map<AtomRef, Expr> out;
  for (const std::string& dep : x.jet.dependents) {
    for (const std::string& j : indices) {
      AtomRef a = jet_atom(dep, j);
      out.emplace(a, pr.coefficient(a));
    }
  }
  return out;
}

// ---- residuals and verification ----------------------------------------------

std::vector<Expr> symmetry_residual(const SolvedSystem& s, const VectorField& x) {
  x.check();
  Normalizer nf(with_constraints(s, x));
  return residual_with(s.rules, x, nf);
}

std::vector<Expr> symmetry_residual(const PDESystem& s, const VectorField& x) {
  return symmetry_residual(solved_form(s), x);
}

VerificationReport verify_generator(const SolvedSystem& s, const VectorField& x) {
  VerificationReport r;
  r.label = x.label;
  r.remainders = symmetry_residual(s, x);
  for (const Expr& e : r.remainders) {
    r.status = combine(r.status, e.is_zero() ? ZeroStatus::kZero : equals_zero(e));
  }
  return r;
}

VerificationReport verify_generator(const PDESystem& s, const VectorField& x) {
  return verify_generator(solved_form(s), x);
}

// ---- ansatz -----------------------------------------------------------------

AnsatzBasis make_ansatz(const JetSpec& jet, const AnsatzOptions& options) {
  if (options.degree < 0 || options.trig < 0 || options.expw < 0) {
    throw DomainError("ansatz degrees must be nonnegative");
  }
  std::vector<Expr> poly;
  for (int d = 0; d <= options.degree; ++d) {
    if (jet.independents.size() == 1) {
      poly.push_back(pow(symbol(jet.independents[0]), d));
    } else if (jet.independents.size() == 2) {
      for (int a = d; a >= 0; --a) {
        poly.push_back(pow(symbol(jet.independents[0]), a) *
                       pow(symbol(jet.independents[1]), d - a));
      }
    } else {
      throw DomainError("ansatz supports one or two independents");
    }
  }
  std::vector<Expr> trig{Expr(1L)};
  if (options.trig > 0) {
    if (jet.dependents.empty()) throw DomainError("trig dictionary needs a dependent variable");
    Expr v = lieforge::jet(jet.dependents[0]);
    for (int m = 1; m <= options.trig; ++m) {
      trig.push_back(sin(Expr(m) * v));
      trig.push_back(cos(Expr(m) * v));
    }
  }
  std::vector<Expr> expo{Expr(1L)};
  if (options.expw > 0) {
    if (jet.dependents.size() < 2) throw DomainError("exp dictionary needs a second dependent");
    Expr w = lieforge::jet(jet.dependents[1]);
    for (int k = 1; k <= options.expw; ++k) {
      expo.push_back(exp(Expr(k) * w));
      expo.push_back(exp(Expr(-k) * w));
    }
  }
  std::vector<Expr> functional;
  for (const Expr& e : expo) {
    for (const Expr& tr : trig) {
      for (const Expr& p : poly) functional.push_back(e * tr * p);
    }
  }
  AnsatzBasis b{jet, {}};
  auto add_slot = [&](const std::string& slot, const std::vector<Expr>& dict) {
    for (const Expr& e : dict) b.columns.push_back({slot, e});
  };
  for (const std::string& i : jet.independents) add_slot(i, options.functional_xi ? functional : poly);
  for (const std::string& a : jet.dependents) add_slot(a, functional);
  return b;
}

int DeterminingSystem::rank() const {
  EchelonBuilder eb(cols());
  for (const DeterminingRow& r : rows) eb.add_sparse_row(r.entries);
  return eb.rank();
}

std::vector<RationalVector> DeterminingSystem::nullspace() const {
  EchelonBuilder eb(cols());
  for (const DeterminingRow& r : rows) eb.add_sparse_row(r.entries);
  return eb.nullspace();
}

DeterminingSystem determining_system(const SolvedSystem& s, const AnsatzBasis& b, int threads) {
  DeterminingSystem ds;
  for (const AnsatzColumn& c : b.columns) ds.unknown_labels.push_back(c.slot + ":" + c.basis.str());
  const std::size_t n = b.columns.size();
  if (n == 0) return ds;

  // The residual is linear in the field, so each column is processed alone.
  int workers = std::max(1, std::min<int>(threads, static_cast<int>(n)));
  std::vector<std::unique_ptr<Normalizer>> nfs;
  for (int w = 0; w < workers; ++w) nfs.push_back(std::make_unique<Normalizer>(s.rules));
  std::vector<std::vector<Expr>> residuals(n);
  parallel_for(n, workers, [&](std::size_t k, int worker) {
    residuals[k] = residual_with(s.rules, slot_field(b.jet, b.columns[k]), *nfs[worker]);
  });

  std::unordered_map<RowKey, std::size_t, RowKeyHash> index;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t eq = 0; eq < residuals[k].size(); ++eq) {
      for (const Term& t : residuals[k][eq].terms()) {
        RowKey key{eq, t.mono};
        auto [it, fresh] = index.emplace(key, ds.rows.size());
        if (fresh) ds.rows.push_back({eq, t.mono, {}});
        ds.rows[it->second].entries[static_cast<int>(k)] = t.coef;
      }
    }
  }
  std::sort(ds.rows.begin(), ds.rows.end(), [](const DeterminingRow& a, const DeterminingRow& b) {
    if (a.equation != b.equation) return a.equation < b.equation;
    return structural_less(a.monomial, b.monomial);
  });
  return ds;
}

DiscoveryResult discover_symmetries(const SolvedSystem& s, const AnsatzBasis& b, int threads) {
  auto start = std::chrono::steady_clock::now();
  DeterminingSystem ds = determining_system(s, b, threads);
  EchelonBuilder eb(ds.cols());
  for (const DeterminingRow& r : ds.rows) eb.add_sparse_row(r.entries);
  DiscoveryResult out;
  out.rows = ds.rows.size();
  out.rank = eb.rank();
  int label = 0;
  for (const RationalVector& v : eb.nullspace()) {
    VectorField f;
    f.jet = b.jet;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] == Rational(0)) continue;
      const AnsatzColumn& c = b.columns[k];
      Expr term = scale(c.basis, v[k]);
      if (b.jet.is_independent(c.slot)) {
        f.xi[c.slot] = f.xi_of(c.slot) + term;
      } else {
        f.eta[c.slot] = f.eta_of(c.slot) + term;
      }
    }
    drop_zeros(f.xi);
    drop_zeros(f.eta);
    f.label = "X" + std::to_string(++label);
    out.basis.push_back(std::move(f));
  }
  out.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

DiscoveryResult discover_symmetries(const PDESystem& s, const AnsatzBasis& b, int threads) {
  return discover_symmetries(solved_form(s), b, threads);
}

// ---- span membership ---------------------------------------------------------

std::map<std::pair<std::string, Monomial>, Expr> field_coordinates(const VectorField& x) {
  std::map<std::pair<std::string, Monomial>, Expr> out;
  for (const auto& [name, e] : x.components()) {
    for (const Term& t : e.terms()) {
      std::vector<Factor> param;
      std::vector<Factor> functional;
      for (const Factor& f : t.mono.factors()) {
        (is_parameter_atom(x.jet, f.atom) ? param : functional).push_back(f);
      }
      Expr value = Expr::from_monomial(Monomial(std::move(param)), t.coef);
      auto key = std::make_pair(name, Monomial(std::move(functional)));
      auto it = out.find(key);
      if (it == out.end()) {
        out.emplace(key, value);
      } else {
        it->second += value;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

namespace {

// Coordinate matrix: one column per field over the union of keys.
std::vector<std::vector<Expr>> coordinate_columns(const std::vector<VectorField>& fields,
                                                  std::vector<std::pair<std::string, Monomial>>& keys) {
  std::vector<std::map<std::pair<std::string, Monomial>, Expr>> coords;
  for (const VectorField& f : fields) coords.push_back(field_coordinates(f));
  std::map<std::pair<std::string, Monomial>, int> slot;
  for (const auto& c : coords) {
    for (const auto& [k, v] : c) {
      if (slot.emplace(k, 0).second) keys.push_back(k);
    }
  }
  std::vector<std::vector<Expr>> cols;
  for (const auto& c : coords) {
    std::vector<Expr> col;
    for (const auto& k : keys) {
      auto it = c.find(k);
      col.push_back(it == c.end() ? Expr() : it->second);
    }
    cols.push_back(std::move(col));
  }
  return cols;
}

}  // namespace

std::optional<std::vector<Expr>> span_membership(const VectorField& x,
                                                 const std::vector<VectorField>& basis) {
  std::vector<VectorField> all = basis;
  all.push_back(x);
  std::vector<std::pair<std::string, Monomial>> keys;
  auto cols = coordinate_columns(all, keys);
  std::vector<Expr> target = std::move(cols.back());
  cols.pop_back();
  if (cols.empty()) {
    if (x.is_zero()) return std::vector<Expr>{};
    return std::nullopt;
  }
  return solve_symbolic(cols, target);
}

int field_rank(const std::vector<VectorField>& fields) {
  std::vector<std::pair<std::string, Monomial>> keys;
  return rank_symbolic(coordinate_columns(fields, keys));
}

// ---- catalogue ----------------------------------------------------------------

JetSpec reduced_spec() { return ode_spec({"f", "g"}, {"c"}); }

std::vector<VectorField> catalogue_generators(int member) {
  using C = std::map<std::string, std::string>;
  std::vector<std::pair<std::string, C>> rows;
  switch (member) {
    case 2:
      rows = {{"Γ_1a", {{"t", "1"}}},
              {"Γ_2a", {{"t", "t"}, {"x", "x/2"}}},
              {"Γ_3a", {{"t", "t^2"}, {"x", "t*x"}, {"v", "x^2/4"}, {"w", "-t/2"}}},
              {"Γ_4a", {{"x", "1"}}},
              {"Γ_5a", {{"x", "t"}, {"v", "x/2"}}},
              {"Γ_6a", {{"v", "1"}}},
              {"Γ_7a", {{"w", "1"}}}};
      break;
    case 3:
      rows = {{"Γ_1b", {{"t", "1"}}},
              {"Γ_2b", {{"t", "1"}, {"x", "x/3"}}},
              {"Γ_3b", {{"x", "1"}}},
              {"Γ_4b", {{"w", "1"}}},
              {"Γ_5b", {{"v", "sin(2*v)/2"}, {"w", "-cos(2*v)/2"}}},
              {"Γ_6b", {{"v", "cos(2*v)/2"}, {"w", "sin(2*v)/2"}}},
              {"Γ_7b", {{"v", "1"}}}};
      break;
    case 4:
      rows = {{"Γ_1c", {{"t", "1"}}},
              {"Γ_2c", {{"v", "1"}}},
              {"Γ_3c", {{"w", "1"}}},
              {"Γ_4c", {{"x", "1"}}}};
      break;
    default:
      throw DomainError("catalogue generators exist for members 2, 3 and 4");
  }
  std::vector<VectorField> out;
  for (const auto& [label, comps] : rows) out.push_back(make_field(real_pde_spec(), comps, label));
  return out;
}

VectorField member3_scaling() {
  return make_field(real_pde_spec(), {{"t", "t"}, {"x", "x/3"}}, "t*d_t + (x/3)*d_x");
}

VectorField infinite_family(int member, bool drop_constraint) {
  JetSpec jet = real_pde_spec();
  std::map<std::string, std::string> comps;
  std::string rhs;
  if (member == 2) {
    jet.unknowns = {"a", "b"};
    comps = {{"v", "-exp(-w)*(b*cos(v) + a*sin(v))"}, {"w", "exp(-w)*(a*cos(v) - b*sin(v))"}};
    rhs = "_xx";
  } else if (member == 3) {
    jet.unknowns = {"c", "d"};
    comps = {{"v", "-exp(-w)*(c*cos(v) + d*sin(v))"}, {"w", "-exp(-w)*(-d*cos(v) + c*sin(v))"}};
    rhs = "_xxx";
  } else {
    throw DomainError("infinite families exist for members 2 and 3");
  }
  VectorField f = make_field(jet, comps, "member " + std::to_string(member) + " family");
  for (std::size_t i = 0; i < jet.unknowns.size(); ++i) {
    if (drop_constraint && i == 1) continue;
    const std::string& u = jet.unknowns[i];
    f.constraints.push_back({unknown_atom(u, "t"), parse_expr(u + rhs, jet)});
  }
  return f;
}

VectorField coupled_member2_family() {
  VectorField f = infinite_family(2);
  f.label = "member 2 family (coupled constraints)";
  f.constraints = {{unknown_atom("a", "t"), parse_expr("b_xx", f.jet)},
                   {unknown_atom("b", "t"), parse_expr("-a_xx", f.jet)}};
  return f;
}

std::vector<VectorField> catalogue_reduced_generators(const std::string& family) {
  using C = std::map<std::string, std::string>;
  std::vector<std::pair<std::string, C>> rows;
  if (family == "d") {
    rows = {
        {"Γ_1d", {{"s", "1"}}},
        {"Γ_2d",
         {{"f", "cos(2*f)*cos(c*s)/2 + sin(2*f)*sin(c*s)/2"},
          {"g", "cos(c*s)*sin(2*f)/2 - cos(2*f)*sin(c*s)/2"}}},
        {"Γ_3d",
         {{"f", "cos(2*f)*sin(c*s)/2 - cos(c*s)*sin(2*f)/2"},
          {"g", "cos(2*f)*cos(c*s)/2 + sin(2*f)*sin(c*s)/2"}}},
        {"Γ_4d", {{"f", "1"}}},
        {"Γ_5d", {{"g", "1"}}},
        {"Γ_6d", {{"f", "-exp(-g)*cos(f)"}, {"g", "-exp(-g)*sin(f)"}}},
        {"Γ_7d",
         {{"f", "-exp(-g)*cos(f)*cos(c*s)/c - exp(-g)*sin(f)*sin(c*s)/c"},
          {"g", "-(exp(-g)*cos(c*s)*sin(f)/c + exp(-g)*cos(f)*sin(c*s)/c)"}}},
        {"Γ_8d",
         {{"f", "exp(-g)*cos(c*s)*sin(f)/c - exp(-g)*cos(f)*sin(c*s)/c"},
          {"g", "-exp(-g)*cos(f)*cos(c*s)/c - exp(-g)*sin(f)*sin(c*s)/c"}}},
        {"Γ_9d", {{"f", "-exp(-g)*sin(f)"}, {"g", "exp(-g)*cos(f)"}}},
        {"Γ_10d",
         {{"s", "exp(g)*cos(f)"}, {"f", "c*exp(g)*cos(f)/2"}, {"g", "-c*exp(g)*sin(f)/2"}}},
        {"Γ_11d",
         {{"s", "exp(g)*sin(f)*sin(c*s)/c + exp(g)*cos(f)*cos(c*s)/c"},
          {"f", "exp(g)*cos(f)*cos(c*s)/2 + exp(g)*sin(f)*sin(c*s)/2"},
          {"g", "exp(g)*cos(c*s)*sin(f)/2 - exp(g)*cos(f)*sin(c*s)/2"}}},
        {"Γ_12d",
         {{"s", "-(exp(g)*cos(c*s)*sin(f)/c + exp(g)*cos(f)*sin(c*s)/c)"},
          {"f", "-(exp(g)*cos(c*s)*sin(f)/2 + exp(g)*cos(f)*sin(c*s)/2)"},
          {"g", "exp(g)*cos(f)*cos(c*s)/2 + exp(g)*sin(f)*sin(c*s)/2"}}},
    };
  } else if (family == "f") {
    rows = {{"Γ_1f", {{"f", "1"}}},
            {"Γ_2f", {{"g", "1"}}},
            {"Γ_3f", {{"s", "-sin(sqrt(c)*s)/sqrt(c)"}, {"g", "-cos(sqrt(c)*s)"}}},
            {"Γ_4f", {{"s", "-cos(sqrt(c)*s)/sqrt(c)"}, {"g", "sin(sqrt(c)*s)"}}},
            {"Γ_5f", {{"s", "1"}}}};
  } else if (family == "j") {
    rows = {{"Γ_1j", {{"s", "1"}}}, {"Γ_2j", {{"f", "1"}}}, {"Γ_3j", {{"g", "1"}}}};
  } else {
    throw DomainError("reduced generator family must be d, f or j");
  }
  std::vector<VectorField> out;
  for (const auto& [label, comps] : rows) out.push_back(make_field(reduced_spec(), comps, label));
  return out;
}

std::vector<VectorField> corrected_reduced_generators() {
  JetSpec jet = reduced_spec();
  return {
      make_field(jet,
                 {{"f", "-exp(-g)*cos(f - c*s)/c"}, {"g", "-exp(-g)*sin(f - c*s)/c"}},
                 "Γ_7d (corrected)"),
      make_field(jet,
                 {{"s", "-exp(g)*sin(f - c*s)/c"},
                  {"f", "-exp(g)*sin(f - c*s)/2"},
                  {"g", "exp(g)*cos(f - c*s)/2"}},
                 "Γ_12d (corrected)"),
  };
}

}  // namespace lieforge
