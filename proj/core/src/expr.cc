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

#include "lieforge/expr.h"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>
#include <unordered_map>

namespace lieforge {
namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

const std::shared_ptr<const std::vector<Term>>& empty_terms() {
  static const auto kEmpty = std::make_shared<const std::vector<Term>>();
  return kEmpty;
}

// ---------------------------------------------------------------------------
// Interner

class AtomTable {
 public:
  static AtomTable& instance() {
    static AtomTable table;
    return table;
  }

  AtomRef intern(AtomKind kind, std::string_view name, std::string_view derivs, const Expr& arg,
                 const Expr& modulus) {
    std::size_t h = static_cast<std::size_t>(kind);
    h = mix(h, std::hash<std::string_view>{}(name));
    h = mix(h, std::hash<std::string_view>{}(derivs));
    h = mix(h, arg.hash());
    h = mix(h, modulus.hash());
    std::lock_guard<std::mutex> lock(mu_);
    auto [lo, hi] = index_.equal_range(h);
    for (auto it = lo; it != hi; ++it) {
      const AtomNode* n = it->second;
      if (n->kind == kind && n->name == name && n->derivs == derivs && n->arg == arg &&
          n->modulus == modulus) {
        return n;
      }
    }
    nodes_.push_back(AtomNode{static_cast<std::uint32_t>(nodes_.size()), kind, std::string(name),
                              std::string(derivs), arg, modulus, h});
    const AtomNode* n = &nodes_.back();
    index_.emplace(h, n);
    return n;
  }

 private:
  std::mutex mu_;
  std::deque<AtomNode> nodes_;
  std::unordered_multimap<std::size_t, const AtomNode*> index_;
};

AtomRef intern(AtomKind kind, std::string_view name = {}, std::string_view derivs = {},
               const Expr& arg = Expr(), const Expr& modulus = Expr()) {
  return AtomTable::instance().intern(kind, name, derivs, arg, modulus);
}

bool factor_less(const Factor& a, const Factor& b) { return a.atom->id < b.atom->id; }

// ---------------------------------------------------------------------------
// Term accumulation

void sort_and_combine(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono < b.mono; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational sum = terms[i].coef;
    while (j < terms.size() && terms[j].mono == terms[i].mono) {
      sum += terms[j].coef;
      ++j;
    }
    if (sgn(sum) != 0) {
      if (out != i) terms[out].mono = std::move(terms[i].mono);
      terms[out].coef = std::move(sum);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

bool is_special(const AtomNode* a) {
  return a->kind == AtomKind::kImaginary || a->kind == AtomKind::kRoot ||
         a->kind == AtomKind::kExp || a->is_trig();
}

Expr trig_pair(AtomRef a, AtomRef b) {
  const Expr& x = a->arg;
  const Expr& y = b->arg;
  Rational half(1, 2);
  if (a->kind == AtomKind::kSin && b->kind == AtomKind::kSin) {
    return scale(cos(x - y) - cos(x + y), half);
  }
  if (a->kind == AtomKind::kCos && b->kind == AtomKind::kCos) {
    return scale(cos(x - y) + cos(x + y), half);
  }
  if (a->kind == AtomKind::kCos) std::swap(a, b);
  // sin(x) cos(y), with x the sine argument
  const Expr& s = a->arg;
  const Expr& c = b->arg;
  return scale(sin(s + c) + sin(s - c), half);
}

// Appends coef * (a*b) in canonical form to `out`.
void multiply_monomials(const Monomial& a, const Monomial& b, const Rational& coef,
                        std::vector<Term>& out) {
  auto fa = a.factors();
  auto fb = b.factors();
  std::vector<Factor> merged;
  merged.reserve(fa.size() + fb.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < fa.size() || j < fb.size()) {
    if (j == fb.size() || (i < fa.size() && fa[i].atom->id < fb[j].atom->id)) {
      merged.push_back(fa[i++]);
    } else if (i == fa.size() || fb[j].atom->id < fa[i].atom->id) {
      merged.push_back(fb[j++]);
    } else {
      int e = fa[i].exp + fb[j].exp;
      if (e != 0) merged.push_back({fa[i].atom, e});
      ++i;
      ++j;
    }
  }
  bool needs_fix = false;
  int n_exp = 0;
  int n_trig = 0;
  for (const Factor& f : merged) {
    switch (f.atom->kind) {
      case AtomKind::kImaginary:
      case AtomKind::kRoot:
        if (f.exp != 1) needs_fix = true;
        break;
      case AtomKind::kExp:
        n_exp += 1;
        if (f.exp != 1) needs_fix = true;
        break;
      case AtomKind::kSin:
      case AtomKind::kCos:
        n_trig += f.exp > 0 ? f.exp : 1;
        if (f.exp < 1) needs_fix = true;
        break;
      default:
        break;
    }
  }
  if (n_exp > 1 || n_trig > 1) needs_fix = true;
  if (!needs_fix) {
    out.push_back(Term{Monomial(std::move(merged)), coef});
    return;
  }
  std::vector<Factor> plain;
  Expr fixed(coef);
  Expr exp_arg;
  bool have_exp = false;
  std::vector<AtomRef> trig;
  for (const Factor& f : merged) {
    if (!is_special(f.atom)) {
      plain.push_back(f);
      continue;
    }
    switch (f.atom->kind) {
      case AtomKind::kImaginary: {
        int e = ((f.exp % 4) + 4) % 4;
        if (e >= 2) fixed = -fixed;
        if (e % 2 == 1) fixed = fixed * Expr::from_atom(f.atom, 1);
        break;
      }
      case AtomKind::kRoot: {
        int q = f.exp >= 0 ? f.exp / 2 : -((-f.exp + 1) / 2);
        int r = f.exp - 2 * q;
        if (q != 0) fixed = fixed * Expr::from_atom(symbol_atom(f.atom->name), q);
        if (r != 0) fixed = fixed * Expr::from_atom(f.atom, r);
        break;
      }
      case AtomKind::kExp:
        exp_arg = exp_arg + scale(f.atom->arg, Rational(f.exp));
        have_exp = true;
        break;
      default:
        if (f.exp < 0) throw Error("negative power of a trigonometric atom");
        for (int k = 0; k < f.exp; ++k) trig.push_back(f.atom);
        break;
    }
  }
  if (have_exp) fixed = fixed * exp(exp_arg);
  if (!trig.empty()) {
    Expr t = Expr::from_atom(trig[0]);
    for (std::size_t k = 1; k < trig.size(); ++k) {
      Expr next;
      for (const Term& term : t.terms()) {
        AtomRef present = nullptr;
        std::vector<Factor> rest;
        for (const Factor& f : term.mono.factors()) {
          if (f.atom->is_trig()) {
            present = f.atom;
          } else {
            rest.push_back(f);
          }
        }
        Expr piece = Expr::from_monomial(Monomial(std::move(rest)), term.coef);
        next = next + (present ? piece * trig_pair(present, trig[k])
                               : piece * Expr::from_atom(trig[k]));
      }
      t = next;
    }
    fixed = fixed * t;
  }
  Expr base = Expr::from_monomial(Monomial(std::move(plain)), Rational(1));
  Expr result = base * fixed;
  for (const Term& t : result.terms()) out.push_back(t);
}

// Structural leading term's coefficient sign (for argument normalization).
int leading_sign(const Expr& e) {
  if (e.is_zero()) return 0;
  const Term* best = &e.terms()[0];
  for (const Term& t : e.terms()) {
    if (structural_less(t.mono, best->mono)) best = &t;
  }
  return sgn(best->coef);
}

int kind_rank(AtomKind k) { return static_cast<int>(k); }

}  // namespace

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end(), factor_less);
}

int Monomial::degree_of(AtomRef a) const {
  for (const Factor& f : factors_) {
    if (f.atom == a) return f.exp;
  }
  return 0;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0x51ed27;
  for (const Factor& f : factors_) h = mix(mix(h, f.atom->id), static_cast<std::size_t>(f.exp));
  return h;
}

Monomial Monomial::without(AtomRef a) const {
  std::vector<Factor> out;
  out.reserve(factors_.size());
  for (const Factor& f : factors_) {
    if (f.atom != a) out.push_back(f);
  }
  Monomial m;
  m.factors_ = std::move(out);
  return m;
}

Monomial Monomial::adjusted(AtomRef a, int delta) const {
  std::vector<Factor> out;
  out.reserve(factors_.size() + 1);
  bool found = false;
  for (const Factor& f : factors_) {
    if (f.atom == a) {
      found = true;
      if (f.exp + delta != 0) out.push_back({a, f.exp + delta});
    } else {
      out.push_back(f);
    }
  }
  if (!found && delta != 0) out.push_back({a, delta});
  return Monomial(std::move(out));
}

bool operator<(const Monomial& a, const Monomial& b) {
  auto fa = a.factors();
  auto fb = b.factors();
  std::size_t n = std::min(fa.size(), fb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (fa[i].atom != fb[i].atom) return fa[i].atom->id < fb[i].atom->id;
    if (fa[i].exp != fb[i].exp) return fa[i].exp < fb[i].exp;
  }
  return fa.size() < fb.size();
}

// ---------------------------------------------------------------------------
// Expr

Expr::Expr() : terms_(empty_terms()) {}

Expr::Expr(long value) : Expr(Rational(value)) {}

Expr::Expr(const Rational& value) : terms_(empty_terms()) {
  if (sgn(value) != 0) {
    terms_ = std::make_shared<const std::vector<Term>>(std::vector<Term>{Term{Monomial(), value}});
  }
}

Expr Expr::from_atom(AtomRef a, int exp) {
  if (exp == 0) return Expr(1L);
  return Expr(std::make_shared<const std::vector<Term>>(
      std::vector<Term>{Term{Monomial({Factor{a, exp}}), Rational(1)}}));
}

Expr Expr::from_monomial(const Monomial& m, const Rational& coef) {
  if (sgn(coef) == 0) return Expr();
  return Expr(std::make_shared<const std::vector<Term>>(std::vector<Term>{Term{m, coef}}));
}

Expr Expr::from_terms(std::vector<Term> terms) {
  sort_and_combine(terms);
  if (terms.empty()) return Expr();
  return Expr(std::make_shared<const std::vector<Term>>(std::move(terms)));
}

std::optional<Rational> Expr::as_rational() const {
  if (terms_->empty()) return Rational(0);
  if (terms_->size() == 1 && (*terms_)[0].mono.is_one()) return (*terms_)[0].coef;
  return std::nullopt;
}

std::size_t Expr::hash() const {
  std::size_t h = 0xabcdef;
  for (const Term& t : *terms_) h = mix(mix(h, t.mono.hash()), hash_value(t.coef));
  return h;
}

bool Expr::contains(AtomRef a) const {
  for (const Term& t : *terms_) {
    for (const Factor& f : t.mono.factors()) {
      if (f.atom == a) return true;
      if (!f.atom->arg.is_zero() && f.atom->arg.contains(a)) return true;
      if (!f.atom->modulus.is_zero() && f.atom->modulus.contains(a)) return true;
    }
  }
  return false;
}

std::vector<AtomRef> Expr::atoms() const {
  std::set<AtomRef> seen;
  for (const Term& t : *terms_) {
    for (const Factor& f : t.mono.factors()) seen.insert(f.atom);
  }
  std::vector<AtomRef> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](AtomRef a, AtomRef b) { return structural_less(a, b); });
  return out;
}

std::vector<AtomRef> Expr::atoms_deep() const {
  std::set<AtomRef> seen;
  std::vector<const Expr*> stack{this};
  while (!stack.empty()) {
    const Expr* e = stack.back();
    stack.pop_back();
    for (const Term& t : e->terms()) {
      for (const Factor& f : t.mono.factors()) {
        if (!seen.insert(f.atom).second) continue;
        if (!f.atom->arg.is_zero()) stack.push_back(&f.atom->arg);
        if (!f.atom->modulus.is_zero()) stack.push_back(&f.atom->modulus);
      }
    }
  }
  std::vector<AtomRef> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](AtomRef a, AtomRef b) { return structural_less(a, b); });
  return out;
}

Expr Expr::operator-() const {
  if (is_zero()) return *this;
  std::vector<Term> t(terms_->begin(), terms_->end());
  for (Term& x : t) x.coef = -x.coef;
  return Expr(std::make_shared<const std::vector<Term>>(std::move(t)));
}

Expr operator+(const Expr& a, const Expr& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto ta = a.terms();
  auto tb = b.terms();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < ta.size() || j < tb.size()) {
    if (j == tb.size() || (i < ta.size() && ta[i].mono < tb[j].mono)) {
      out.push_back(ta[i++]);
    } else if (i == ta.size() || tb[j].mono < ta[i].mono) {
      out.push_back(tb[j++]);
    } else {
      Rational s = ta[i].coef + tb[j].coef;
      if (sgn(s) != 0) out.push_back(Term{ta[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  if (out.empty()) return Expr();
  return Expr(std::make_shared<const std::vector<Term>>(std::move(out)));
}

Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }

Expr operator*(const Expr& a, const Expr& b) {
  if (a.is_zero() || b.is_zero()) return Expr();
  if (auto q = a.as_rational()) return scale(b, *q);
  if (auto q = b.as_rational()) return scale(a, *q);
  std::vector<Term> out;
  out.reserve(a.size() * b.size());
  for (const Term& x : a.terms()) {
    for (const Term& y : b.terms()) {
      multiply_monomials(x.mono, y.mono, x.coef * y.coef, out);
    }
  }
  return Expr::from_terms(std::move(out));
}

Expr operator/(const Expr& a, const Expr& b) { return a * reciprocal(b); }

bool operator==(const Expr& a, const Expr& b) {
  if (a.terms_ == b.terms_) return true;
  if (a.size() != b.size()) return false;
  auto ta = a.terms();
  auto tb = b.terms();
  for (std::size_t i = 0; i < ta.size(); ++i) {
    if (!(ta[i].mono == tb[i].mono) || ta[i].coef != tb[i].coef) return false;
  }
  return true;
}

bool operator<(const Expr& a, const Expr& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  auto ta = a.terms();
  auto tb = b.terms();
  for (std::size_t i = 0; i < ta.size(); ++i) {
    if (!(ta[i].mono == tb[i].mono)) return ta[i].mono < tb[i].mono;
    if (ta[i].coef != tb[i].coef) return ta[i].coef < tb[i].coef;
  }
  return false;
}

Expr scale(const Expr& e, const Rational& q) {
  if (sgn(q) == 0 || e.is_zero()) return Expr();
  if (q == 1) return e;
  std::vector<Term> t(e.terms().begin(), e.terms().end());
  for (Term& x : t) x.coef *= q;
  return Expr::from_terms(std::move(t));
}

Expr pow(const Expr& base, int n) {
  if (n < 0) return pow(reciprocal(base), -n);
  Expr result(1L);
  Expr b = base;
  while (n > 0) {
    if (n & 1) result = result * b;
    n >>= 1;
    if (n > 0) b = b * b;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Atom constructors

AtomRef symbol_atom(std::string_view name) { return intern(AtomKind::kSymbol, name); }

AtomRef jet_atom(std::string_view dependent, std::string_view derivs) {
  std::string d(derivs);
  std::sort(d.begin(), d.end());
  return intern(AtomKind::kJet, dependent, d);
}

AtomRef unknown_atom(std::string_view name, std::string_view derivs) {
  std::string d(derivs);
  std::sort(d.begin(), d.end());
  return intern(AtomKind::kUnknown, name, d);
}

AtomRef root_atom(std::string_view radicand) { return intern(AtomKind::kRoot, radicand); }

AtomRef imaginary_atom() { return intern(AtomKind::kImaginary, "I"); }

AtomRef extend_derivative(AtomRef base, char var) {
  if (base->kind != AtomKind::kJet && base->kind != AtomKind::kUnknown) {
    throw DerivativeError("cannot extend derivative of " + to_string(base));
  }
  std::string d = base->derivs + var;
  std::sort(d.begin(), d.end());
  return intern(base->kind, base->name, d);
}

Expr symbol(std::string_view name) { return Expr::from_atom(symbol_atom(name)); }
Expr jet(std::string_view dependent, std::string_view derivs) {
  return Expr::from_atom(jet_atom(dependent, derivs));
}
Expr unknown(std::string_view name, std::string_view derivs) {
  return Expr::from_atom(unknown_atom(name, derivs));
}
Expr imag() { return Expr::from_atom(imaginary_atom()); }
Expr sqrt_of(std::string_view radicand) { return Expr::from_atom(root_atom(radicand)); }

void validate_transcendental_arg(const Expr& arg) {
  for (const Term& t : arg.terms()) {
    int coord_degree = 0;
    for (const Factor& f : t.mono.factors()) {
      switch (f.atom->kind) {
        case AtomKind::kSymbol:
        case AtomKind::kRoot:
        case AtomKind::kImaginary:
          break;
        case AtomKind::kJet:
        case AtomKind::kUnknown:
          if (f.exp < 0) throw ArgumentClassError("negative power in transcendental argument");
          coord_degree += f.exp;
          break;
        default:
          throw ArgumentClassError("transcendental argument must be a linear form, got " +
                                   arg.str());
      }
    }
    if (coord_degree > 1) {
      throw ArgumentClassError("transcendental argument is not linear: " + arg.str());
    }
  }
}

std::pair<Expr, Expr> split_imaginary(const Expr& e) {
  AtomRef i = imaginary_atom();
  std::vector<Term> re;
  std::vector<Term> im;
  for (const Term& t : e.terms()) {
    int d = t.mono.degree_of(i);
    if (d == 0) {
      re.push_back(t);
    } else if (d == 1) {
      im.push_back(Term{t.mono.without(i), t.coef});
    } else {
      throw Error("non-canonical power of I in " + e.str());
    }
  }
  return {Expr::from_terms(std::move(re)), Expr::from_terms(std::move(im))};
}

Expr exp(const Expr& arg) {
  validate_transcendental_arg(arg);
  auto [re, im] = split_imaginary(arg);
  Expr real_part(1L);
  if (!re.is_zero()) real_part = Expr::from_atom(intern(AtomKind::kExp, {}, {}, re));
  if (im.is_zero()) return real_part;
  return real_part * (cos(im) + imag() * sin(im));
}

Expr sin(const Expr& arg) {
  validate_transcendental_arg(arg);
  auto [re, im] = split_imaginary(arg);
  if (!im.is_zero()) {
    // sin(a + ib) = sin a cosh b + i cos a sinh b
    Expr ch = scale(exp(im) + exp(-im), Rational(1, 2));
    Expr sh = scale(exp(im) - exp(-im), Rational(1, 2));
    return sin(re) * ch + imag() * cos(re) * sh;
  }
  if (re.is_zero()) return Expr();
  if (leading_sign(re) < 0) return -Expr::from_atom(intern(AtomKind::kSin, {}, {}, -re));
  return Expr::from_atom(intern(AtomKind::kSin, {}, {}, re));
}

Expr cos(const Expr& arg) {
  validate_transcendental_arg(arg);
  auto [re, im] = split_imaginary(arg);
  if (!im.is_zero()) {
    // cos(a + ib) = cos a cosh b - i sin a sinh b
    Expr ch = scale(exp(im) + exp(-im), Rational(1, 2));
    Expr sh = scale(exp(im) - exp(-im), Rational(1, 2));
    return cos(re) * ch - imag() * sin(re) * sh;
  }
  if (re.is_zero()) return Expr(1L);
  if (leading_sign(re) < 0) return Expr::from_atom(intern(AtomKind::kCos, {}, {}, -re));
  return Expr::from_atom(intern(AtomKind::kCos, {}, {}, re));
}

Expr tan(const Expr& arg) {
  validate_transcendental_arg(arg);
  auto [re, im] = split_imaginary(arg);
  if (!im.is_zero()) throw ArgumentClassError("tan of a complex argument is not supported");
  if (re.is_zero()) return Expr();
  if (leading_sign(re) < 0) return -Expr::from_atom(intern(AtomKind::kTan, {}, {}, -re));
  return Expr::from_atom(intern(AtomKind::kTan, {}, {}, re));
}

namespace {

Expr jacobi(AtomKind kind, const Expr& arg, const Expr& modulus, bool odd) {
  validate_transcendental_arg(arg);
  auto [re, im] = split_imaginary(arg);
  if (!im.is_zero()) throw ArgumentClassError("Jacobi functions of complex argument unsupported");
  for (AtomRef a : modulus.atoms_deep()) {
    if (a->kind == AtomKind::kJet || a->kind == AtomKind::kUnknown) {
      throw ArgumentClassError("Jacobi modulus must be constant");
    }
  }
  if (re.is_zero()) return odd ? Expr() : Expr(1L);
  if (leading_sign(re) < 0) {
    Expr a = Expr::from_atom(intern(kind, {}, {}, -re, modulus));
    return odd ? -a : a;
  }
  return Expr::from_atom(intern(kind, {}, {}, re, modulus));
}

}  // namespace

Expr jacobi_sn(const Expr& arg, const Expr& modulus) {
  return jacobi(AtomKind::kJacobiSn, arg, modulus, true);
}
Expr jacobi_cn(const Expr& arg, const Expr& modulus) {
  return jacobi(AtomKind::kJacobiCn, arg, modulus, false);
}
Expr jacobi_dn(const Expr& arg, const Expr& modulus) {
  return jacobi(AtomKind::kJacobiDn, arg, modulus, false);
}

Expr reciprocal(const Expr& e) {
  if (e.is_zero()) throw DivisionByZeroError("division by zero");
  if (e.is_monomial()) {
    const Term& t = e.terms()[0];
    Expr out(Rational(1) / t.coef);
    for (const Factor& f : t.mono.factors()) {
      switch (f.atom->kind) {
        case AtomKind::kSymbol:
          out = out * Expr::from_atom(f.atom, -f.exp);
          break;
        case AtomKind::kRoot:
          out = out * pow(Expr::from_atom(f.atom) * Expr::from_atom(symbol_atom(f.atom->name), -1),
                          f.exp);
          break;
        case AtomKind::kImaginary:
          out = out * pow(-imag(), f.exp);
          break;
        case AtomKind::kExp:
          out = out * exp(scale(f.atom->arg, Rational(-f.exp)));
          break;
        case AtomKind::kInverse:
          out = out * pow(f.atom->arg, f.exp);
          break;
        default:
          out = out * Expr::from_atom(intern(AtomKind::kInverse, {}, {}, Expr::from_atom(f.atom)),
                                      f.exp);
          break;
      }
    }
    return out;
  }
  // Normalize so the structurally leading coefficient is 1.
  const Term* lead = &e.terms()[0];
  for (const Term& t : e.terms()) {
    if (structural_less(t.mono, lead->mono)) lead = &t;
  }
  Rational q = lead->coef;
  Expr normalized = scale(e, Rational(1) / q);
  return scale(Expr::from_atom(intern(AtomKind::kInverse, {}, {}, normalized)), Rational(1) / q);
}

// ---------------------------------------------------------------------------
// Structure

bool structural_less(AtomRef a, AtomRef b) {
  if (a == b) return false;
  if (a->kind != b->kind) return kind_rank(a->kind) < kind_rank(b->kind);
  if (a->name != b->name) return a->name < b->name;
  if (a->derivs.size() != b->derivs.size()) return a->derivs.size() < b->derivs.size();
  if (a->derivs != b->derivs) return a->derivs < b->derivs;
  if (!(a->arg == b->arg)) return structural_less(a->arg, b->arg);
  return structural_less(a->modulus, b->modulus);
}

namespace {

std::vector<Factor> structural_factors(const Monomial& m) {
  std::vector<Factor> f(m.factors().begin(), m.factors().end());
  std::sort(f.begin(), f.end(),
            [](const Factor& x, const Factor& y) { return structural_less(x.atom, y.atom); });
  return f;
}

int positive_degree(const Monomial& m) {
  int d = 0;
  for (const Factor& f : m.factors()) d += std::max(f.exp, 0);
  return d;
}

}  // namespace

bool structural_less(const Monomial& a, const Monomial& b) {
  if (a == b) return false;
  int da = positive_degree(a);
  int db = positive_degree(b);
  if (da != db) return da > db;
  auto fa = structural_factors(a);
  auto fb = structural_factors(b);
  std::size_t n = std::min(fa.size(), fb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (fa[i].atom != fb[i].atom) return structural_less(fa[i].atom, fb[i].atom);
    if (fa[i].exp != fb[i].exp) return fa[i].exp > fb[i].exp;
  }
  return fa.size() > fb.size();
}

bool structural_less(const Expr& a, const Expr& b) {
  if (a == b) return false;
  auto ta = sorted_terms(a);
  auto tb = sorted_terms(b);
  std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (!(ta[i].mono == tb[i].mono)) return structural_less(ta[i].mono, tb[i].mono);
    if (ta[i].coef != tb[i].coef) return ta[i].coef < tb[i].coef;
  }
  return ta.size() < tb.size();
}

std::vector<Term> sorted_terms(const Expr& e) {
  std::vector<Term> t(e.terms().begin(), e.terms().end());
  std::stable_sort(t.begin(), t.end(),
                   [](const Term& x, const Term& y) { return structural_less(x.mono, y.mono); });
  return t;
}

// ---------------------------------------------------------------------------
// Canonical rebuild

namespace {

Expr rebuild_atom(AtomRef a) {
  switch (a->kind) {
    case AtomKind::kSymbol:
    case AtomKind::kRoot:
    case AtomKind::kJet:
    case AtomKind::kUnknown:
    case AtomKind::kImaginary:
      return Expr::from_atom(a);
    case AtomKind::kExp:
      return exp(to_canonical(a->arg));
    case AtomKind::kSin:
      return sin(to_canonical(a->arg));
    case AtomKind::kCos:
      return cos(to_canonical(a->arg));
    case AtomKind::kTan:
      return tan(to_canonical(a->arg));
    case AtomKind::kJacobiSn:
      return jacobi_sn(to_canonical(a->arg), to_canonical(a->modulus));
    case AtomKind::kJacobiCn:
      return jacobi_cn(to_canonical(a->arg), to_canonical(a->modulus));
    case AtomKind::kJacobiDn:
      return jacobi_dn(to_canonical(a->arg), to_canonical(a->modulus));
    case AtomKind::kInverse:
      return reciprocal(to_canonical(a->arg));
  }
  return Expr::from_atom(a);
}

}  // namespace

Expr to_canonical(const Expr& e) {
  std::vector<Term> out;
  for (const Term& t : e.terms()) {
    Expr prod(t.coef);
    for (const Factor& f : t.mono.factors()) {
      if (f.atom->kind == AtomKind::kSymbol) {
        prod = prod * Expr::from_atom(f.atom, f.exp);
      } else if (f.exp > 0) {
        prod = prod * pow(rebuild_atom(f.atom), f.exp);
      } else {
        prod = prod * pow(reciprocal(rebuild_atom(f.atom)), -f.exp);
      }
    }
    for (const Term& x : prod.terms()) out.push_back(x);
  }
  return Expr::from_terms(std::move(out));
}

// ---------------------------------------------------------------------------
// Calculus

Expr derivation(const Expr& e, const std::function<Expr(AtomRef)>& d) {
  std::unordered_map<AtomRef, Expr> cache;
  auto atom_derivative = [&](AtomRef a) -> Expr {
    auto it = cache.find(a);
    if (it != cache.end()) return it->second;
    Expr r;
    switch (a->kind) {
      case AtomKind::kSymbol:
      case AtomKind::kRoot:
      case AtomKind::kJet:
      case AtomKind::kUnknown:
        r = d(a);
        break;
      case AtomKind::kImaginary:
        break;
      case AtomKind::kExp: {
        Expr da = derivation(a->arg, d);
        if (!da.is_zero()) r = Expr::from_atom(a) * da;
        break;
      }
      case AtomKind::kSin: {
        Expr da = derivation(a->arg, d);
        if (!da.is_zero()) r = cos(a->arg) * da;
        break;
      }
      case AtomKind::kCos: {
        Expr da = derivation(a->arg, d);
        if (!da.is_zero()) r = -(sin(a->arg) * da);
        break;
      }
      case AtomKind::kTan: {
        Expr da = derivation(a->arg, d);
        if (!da.is_zero()) r = (Expr(1L) + pow(Expr::from_atom(a), 2)) * da;
        break;
      }
      case AtomKind::kJacobiSn:
      case AtomKind::kJacobiCn:
      case AtomKind::kJacobiDn: {
        if (!derivation(a->modulus, d).is_zero()) {
          throw DerivativeError("derivative with respect to a Jacobi modulus is not supported");
        }
        Expr da = derivation(a->arg, d);
        if (da.is_zero()) break;
        Expr sn = jacobi_sn(a->arg, a->modulus);
        Expr cn = jacobi_cn(a->arg, a->modulus);
        Expr dn = jacobi_dn(a->arg, a->modulus);
        if (a->kind == AtomKind::kJacobiSn) {
          r = cn * dn * da;
        } else if (a->kind == AtomKind::kJacobiCn) {
          r = -(sn * dn * da);
        } else {
          r = -(a->modulus * a->modulus * sn * cn * da);
        }
        break;
      }
      case AtomKind::kInverse: {
        Expr da = derivation(a->arg, d);
        if (!da.is_zero()) r = -(pow(Expr::from_atom(a), 2) * da);
        break;
      }
    }
    cache.emplace(a, r);
    return r;
  };

  std::vector<Term> out;
  for (const Term& t : e.terms()) {
    for (const Factor& f : t.mono.factors()) {
      Expr df = atom_derivative(f.atom);
      if (df.is_zero()) continue;
      Expr rest = Expr::from_monomial(t.mono.adjusted(f.atom, -1), t.coef * f.exp);
      Expr piece = rest * df;
      for (const Term& x : piece.terms()) out.push_back(x);
    }
  }
  return Expr::from_terms(std::move(out));
}

Expr derive(const Expr& e, AtomRef a) {
  if (!a->is_coordinate()) {
    throw DerivativeError("derivative with respect to composite atom " + to_string(a));
  }
  return derivation(e, [a](AtomRef x) -> Expr {
    if (x == a) return Expr(1L);
    if (x->kind == AtomKind::kRoot && a->kind == AtomKind::kSymbol && x->name == a->name) {
      // d sqrt(c) / dc = sqrt(c) / (2c)
      return scale(Expr::from_atom(x) * Expr::from_atom(a, -1), Rational(1, 2));
    }
    return Expr();
  });
}

// ---------------------------------------------------------------------------
// Substitution

Expr substitute_with(const Expr& e, const std::function<std::optional<Expr>(AtomRef)>& image) {
  std::unordered_map<AtomRef, Expr> cache;
  std::function<Expr(AtomRef)> map_atom = [&](AtomRef a) -> Expr {
    auto it = cache.find(a);
    if (it != cache.end()) return it->second;
    Expr r;
    if (auto img = image(a)) {
      r = *img;
    } else {
      switch (a->kind) {
        case AtomKind::kSymbol:
        case AtomKind::kJet:
        case AtomKind::kUnknown:
        case AtomKind::kImaginary:
          r = Expr::from_atom(a);
          break;
        case AtomKind::kRoot: {
          auto rad = image(symbol_atom(a->name));
          if (!rad) {
            r = Expr::from_atom(a);
            break;
          }
          if (auto q = rad->as_rational()) {
            if (sgn(*q) >= 0 && mpz_perfect_square_p(q->get_num_mpz_t()) &&
                mpz_perfect_square_p(q->get_den_mpz_t())) {
              Integer n;
              Integer dd;
              mpz_sqrt(n.get_mpz_t(), q->get_num_mpz_t());
              mpz_sqrt(dd.get_mpz_t(), q->get_den_mpz_t());
              r = Expr(Rational(n, dd));
              break;
            }
          }
          if (rad->is_monomial() && rad->terms()[0].coef == 1 &&
              rad->terms()[0].mono.factors().size() == 1 &&
              rad->terms()[0].mono.factors()[0].atom->kind == AtomKind::kSymbol &&
              rad->terms()[0].mono.factors()[0].exp == 1) {
            r = sqrt_of(rad->terms()[0].mono.factors()[0].atom->name);
            break;
          }
          throw Error("cannot substitute into sqrt(" + a->name + "): radicand image " + rad->str());
        }
        case AtomKind::kExp:
          r = exp(substitute_with(a->arg, image));
          break;
        case AtomKind::kSin:
          r = sin(substitute_with(a->arg, image));
          break;
        case AtomKind::kCos:
          r = cos(substitute_with(a->arg, image));
          break;
        case AtomKind::kTan:
          r = tan(substitute_with(a->arg, image));
          break;
        case AtomKind::kJacobiSn:
          r = jacobi_sn(substitute_with(a->arg, image), substitute_with(a->modulus, image));
          break;
        case AtomKind::kJacobiCn:
          r = jacobi_cn(substitute_with(a->arg, image), substitute_with(a->modulus, image));
          break;
        case AtomKind::kJacobiDn:
          r = jacobi_dn(substitute_with(a->arg, image), substitute_with(a->modulus, image));
          break;
        case AtomKind::kInverse:
          r = reciprocal(substitute_with(a->arg, image));
          break;
      }
    }
    cache.emplace(a, r);
    return r;
  };

  std::vector<Term> out;
  for (const Term& t : e.terms()) {
    bool untouched = true;
    for (const Factor& f : t.mono.factors()) {
      Expr m = map_atom(f.atom);
      if (!(m.is_monomial() && m.terms()[0].coef == 1 &&
            m.terms()[0].mono == Monomial({Factor{f.atom, 1}}))) {
        untouched = false;
        break;
      }
    }
    if (untouched) {
      out.push_back(t);
      continue;
    }
    Expr prod(t.coef);
    for (const Factor& f : t.mono.factors()) prod = prod * pow(map_atom(f.atom), f.exp);
    for (const Term& x : prod.terms()) out.push_back(x);
  }
  return Expr::from_terms(std::move(out));
}

Expr substitute(const Expr& e, const std::map<AtomRef, Expr>& bindings) {
  std::map<AtomRef, Expr> effective;
  for (const auto& [a, img] : bindings) {
    if (img == Expr::from_atom(a)) continue;
    effective.emplace(a, img);
  }
  // Cycle detection over the dependency graph of bound atoms.
  std::map<AtomRef, std::vector<AtomRef>> edges;
  for (const auto& [a, img] : effective) {
    for (AtomRef b : img.atoms_deep()) {
      if (effective.count(b)) edges[a].push_back(b);
    }
  }
  std::map<AtomRef, int> state;
  std::function<void(AtomRef)> visit = [&](AtomRef a) {
    state[a] = 1;
    for (AtomRef b : edges[a]) {
      if (state[b] == 1) throw CyclicBindingError("cyclic binding through " + to_string(b));
      if (state[b] == 0) visit(b);
    }
    state[a] = 2;
  };
  for (const auto& [a, img] : effective) {
    if (state[a] == 0) visit(a);
  }
  return substitute_with(e, [&](AtomRef a) -> std::optional<Expr> {
    auto it = effective.find(a);
    if (it == effective.end()) return std::nullopt;
    return it->second;
  });
}

// ---------------------------------------------------------------------------
// Collection and polynomial views

std::map<Monomial, Expr> collect_by(const Expr& e, const std::function<bool(AtomRef)>& classifying) {
  std::map<Monomial, std::vector<Term>> groups;
  for (const Term& t : e.terms()) {
    std::vector<Factor> cls;
    std::vector<Factor> rest;
    for (const Factor& f : t.mono.factors()) {
      (classifying(f.atom) ? cls : rest).push_back(f);
    }
    groups[Monomial(std::move(cls))].push_back(Term{Monomial(std::move(rest)), t.coef});
  }
  std::map<Monomial, Expr> out;
  for (auto& [k, v] : groups) {
    Expr c = Expr::from_terms(std::move(v));
    if (!c.is_zero()) out.emplace(k, c);
  }
  return out;
}

std::vector<std::pair<Expr, Expr>> collect_terms(const Expr& e, const std::vector<Expr>& family) {
  std::set<AtomRef> classifying;
  std::vector<Monomial> classes;
  for (const Expr& c : family) {
    if (!c.is_monomial() || c.terms()[0].coef != 1) {
      throw CollectError("collection class must be a monomial with coefficient 1: " + c.str());
    }
    const Monomial& m = c.terms()[0].mono;
    if (std::find(classes.begin(), classes.end(), m) != classes.end()) {
      throw CollectError("overlapping collection classes: " + c.str() + " listed twice");
    }
    classes.push_back(m);
    for (const Factor& f : m.factors()) classifying.insert(f.atom);
  }
  auto grouped = collect_by(e, [&](AtomRef a) { return classifying.count(a) > 0; });
  std::vector<std::pair<Expr, Expr>> out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    auto it = grouped.find(classes[i]);
    out.emplace_back(family[i], it == grouped.end() ? Expr() : it->second);
    if (it != grouped.end()) grouped.erase(it);
  }
  if (!grouped.empty()) {
    throw CollectError("family does not partition the expression: class " +
                       to_string(grouped.begin()->first) + " is not listed");
  }
  return out;
}

std::map<int, Expr> coefficients_in(const Expr& e, AtomRef a) {
  std::map<int, std::vector<Term>> groups;
  for (const Term& t : e.terms()) {
    int d = 0;
    for (const Factor& f : t.mono.factors()) {
      if (f.atom == a) {
        d = f.exp;
      } else if ((!f.atom->arg.is_zero() && f.atom->arg.contains(a)) ||
                 (!f.atom->modulus.is_zero() && f.atom->modulus.contains(a))) {
        throw Error(to_string(a) + " occurs inside " + to_string(f.atom));
      }
    }
    groups[d].push_back(Term{t.mono.without(a), t.coef});
  }
  std::map<int, Expr> out;
  for (auto& [k, v] : groups) out.emplace(k, Expr::from_terms(std::move(v)));
  return out;
}

std::pair<Expr, Expr> divide_polynomial(const Expr& num, const Expr& den, AtomRef var) {
  auto dc = coefficients_in(den, var);
  if (dc.empty()) throw DivisionByZeroError("polynomial division by zero");
  int n = dc.rbegin()->first;
  auto lc = dc.rbegin()->second.as_rational();
  if (!lc || sgn(*lc) == 0) {
    throw Error("leading coefficient of divisor in " + to_string(var) + " is not rational");
  }
  Expr quotient;
  Expr rem = num;
  for (int guard = 0; guard < 10000; ++guard) {
    auto rc = coefficients_in(rem, var);
    if (rc.empty()) break;
    int m = rc.rbegin()->first;
    if (m < n) break;
    Expr q = scale(rc.rbegin()->second, Rational(1) / *lc) * Expr::from_atom(var, m - n);
    if (m == n) q = scale(rc.rbegin()->second, Rational(1) / *lc);
    quotient = quotient + q;
    rem = rem - q * den;
  }
  return {quotient, rem};
}

std::optional<AtomRef> division_variable(const Expr& den) {
  for (AtomRef a : den.atoms()) {
    if (!a->is_coordinate()) continue;
    try {
      auto c = coefficients_in(den, a);
      if (c.rbegin()->first <= 0) continue;
      if (c.rbegin()->second.as_rational()) return a;
    } catch (const Error&) {
      continue;
    }
  }
  return std::nullopt;
}

Expr cancel_inverse(const Expr& e, const Expr& den) {
  Expr r = reciprocal(den);
  if (!r.is_monomial()) return e;
  AtomRef inv = nullptr;
  for (const Factor& f : r.terms()[0].mono.factors()) {
    if (f.atom->kind == AtomKind::kInverse) inv = f.atom;
  }
  if (inv == nullptr) return e;
  const Expr& base = inv->arg;
  auto var = division_variable(base);
  if (!var) return e;
  Expr current = e;
  for (int pass = 0; pass < 64; ++pass) {
    auto coeffs = coefficients_in(current, inv);
    bool changed = false;
    Expr next;
    for (auto& [k, c] : coeffs) {
      if (k >= 1) {
        auto [q, rem] = divide_polynomial(c, base, *var);
        if (rem.is_zero() && !q.is_zero()) {
          next = next + q * Expr::from_atom(inv, k - 1);
          changed = true;
          continue;
        }
      }
      next = next + c * Expr::from_atom(inv, k);
    }
    current = next;
    if (!changed) break;
  }
  return current;
}

}  // namespace lieforge
