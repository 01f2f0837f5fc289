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

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lieforge/errors.h"
#include "lieforge/rational.h"

namespace lieforge {

class Expr;

/// Kinds of atoms a monomial may be built from. The numeric values fix the
/// structural (printing) order of factors inside a monomial.
enum class AtomKind : std::uint8_t {
  kSymbol = 0,    // t, x, s, c, named constants
  kRoot = 1,      // sqrt(symbol), rewritten r^2 -> symbol
  kJet = 2,       // dependent variable with a derivative multi-index
  kUnknown = 3,   // unknown function a(t,x) with a derivative multi-index
  kImaginary = 4, // I
  kExp = 5,
  kSin = 6,
  kCos = 7,
  kTan = 8,
  kJacobiSn = 9,
  kJacobiCn = 10,
  kJacobiDn = 11,
  kInverse = 12,  // 1/(E) for a non-monomial polynomial E
};

struct AtomNode;

/// Interned atoms live for the whole process; identity is pointer identity.
using AtomRef = const AtomNode*;

/// A factor atom^exp. Exponents are nonzero; only kSymbol may carry a
/// negative exponent in canonical form.
struct Factor {
  AtomRef atom;
  int exp;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Product of atom powers, sorted by atom id. The empty monomial is 1.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);

  [[nodiscard]] std::span<const Factor> factors() const { return factors_; }
  [[nodiscard]] bool is_one() const { return factors_.empty(); }
  [[nodiscard]] int degree_of(AtomRef a) const;
  [[nodiscard]] std::size_t hash() const;

  /// Monomial with the power of `a` removed entirely.
  [[nodiscard]] Monomial without(AtomRef a) const;
  /// Monomial with the exponent of `a` changed by `delta`.
  [[nodiscard]] Monomial adjusted(AtomRef a, int delta) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend bool operator<(const Monomial& a, const Monomial& b);

 private:
  std::vector<Factor> factors_;
};

struct Term {
  Monomial mono;
  Rational coef;
};

/// Canonical symbolic expression: a finite sum of distinct monomials with
/// nonzero rational coefficients. Immutable and cheap to copy.
class Expr {
 public:
  Expr();
  Expr(long value);  // NOLINT(google-explicit-constructor)
  Expr(int value) : Expr(static_cast<long>(value)) {}  // NOLINT
  Expr(const Rational& value);  // NOLINT(google-explicit-constructor)

  static Expr from_atom(AtomRef a, int exp = 1);
  static Expr from_monomial(const Monomial& m, const Rational& coef);
  /// Build from raw terms; monomials must already be canonical. Duplicates are
  /// combined and zero coefficients dropped.
  static Expr from_terms(std::vector<Term> terms);

  [[nodiscard]] std::span<const Term> terms() const { return *terms_; }
  [[nodiscard]] std::size_t size() const { return terms_->size(); }
  [[nodiscard]] bool is_zero() const { return terms_->empty(); }
  [[nodiscard]] std::optional<Rational> as_rational() const;
  [[nodiscard]] bool is_monomial() const { return terms_->size() == 1; }
  [[nodiscard]] std::size_t hash() const;

  /// True when any monomial contains atom `a` at any nesting depth.
  [[nodiscard]] bool contains(AtomRef a) const;
  /// Collects all atoms at top level (not inside transcendental arguments).
  [[nodiscard]] std::vector<AtomRef> atoms() const;
  /// Collects all atoms including those inside transcendental arguments.
  [[nodiscard]] std::vector<AtomRef> atoms_deep() const;

  Expr operator-() const;
  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  Expr& operator+=(const Expr& o) { return *this = *this + o; }
  Expr& operator-=(const Expr& o) { return *this = *this - o; }
  Expr& operator*=(const Expr& o) { return *this = *this * o; }

  friend bool operator==(const Expr& a, const Expr& b);
  friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

  /// Strict weak order by (size, terms) using interned ids; stable within a
  /// process, not across processes. Use structural_less for output ordering.
  friend bool operator<(const Expr& a, const Expr& b);

  [[nodiscard]] std::string str() const;

 private:
  explicit Expr(std::shared_ptr<const std::vector<Term>> t) : terms_(std::move(t)) {}
  std::shared_ptr<const std::vector<Term>> terms_;
};

Expr pow(const Expr& base, int n);
Expr scale(const Expr& e, const Rational& q);

/// Payload of an interned atom.
struct AtomNode {
  std::uint32_t id;
  AtomKind kind;
  std::string name;     // symbol / dependent / unknown / root radicand name
  std::string derivs;   // sorted derivative letters for kJet / kUnknown
  Expr arg;             // argument for transcendental atoms, radicand for kInverse
  Expr modulus;         // Jacobi modulus
  std::size_t hash;

  [[nodiscard]] bool is_transcendental() const {
    return kind == AtomKind::kExp || kind == AtomKind::kSin || kind == AtomKind::kCos ||
           kind == AtomKind::kTan || kind == AtomKind::kJacobiSn ||
           kind == AtomKind::kJacobiCn || kind == AtomKind::kJacobiDn;
  }
  [[nodiscard]] bool is_trig() const {
    return kind == AtomKind::kSin || kind == AtomKind::kCos;
  }
  /// Atoms that can be treated as free coordinates (bindable for evaluation).
  [[nodiscard]] bool is_coordinate() const {
    return kind == AtomKind::kSymbol || kind == AtomKind::kJet || kind == AtomKind::kUnknown;
  }
  [[nodiscard]] int order() const { return static_cast<int>(derivs.size()); }
};

// ---- atom constructors (interned) -----------------------------------------

AtomRef symbol_atom(std::string_view name);
AtomRef jet_atom(std::string_view dependent, std::string_view derivs = "");
AtomRef unknown_atom(std::string_view name, std::string_view derivs = "");
AtomRef root_atom(std::string_view radicand);
AtomRef imaginary_atom();

/// Jet atom for `base` (kJet or kUnknown) differentiated once more by `var`.
AtomRef extend_derivative(AtomRef base, char var);

// ---- expression constructors ----------------------------------------------

Expr symbol(std::string_view name);
Expr jet(std::string_view dependent, std::string_view derivs = "");
Expr unknown(std::string_view name, std::string_view derivs = "");
Expr imag();
/// sqrt of a symbol, represented by a root atom r with r^2 -> radicand.
Expr sqrt_of(std::string_view radicand);

/// Smart constructors. Arguments must lie in the admissible class (see
/// validate_transcendental_arg); complex arguments are rewritten through
/// Euler's formula so canonical transcendental arguments are always real.
Expr exp(const Expr& arg);
Expr sin(const Expr& arg);
Expr cos(const Expr& arg);
Expr tan(const Expr& arg);
Expr jacobi_sn(const Expr& arg, const Expr& modulus);
Expr jacobi_cn(const Expr& arg, const Expr& modulus);
Expr jacobi_dn(const Expr& arg, const Expr& modulus);

/// Exact reciprocal. Monomials made of symbols, roots, I and exp invert in
/// closed form; anything else becomes an inverse atom.
Expr reciprocal(const Expr& e);

/// Arguments of transcendental atoms must be polynomial, free of
/// transcendental and inverse atoms, and of degree at most one in jet and
/// unknown-function coordinates per monomial (linear forms whose
/// coefficients may involve constant symbols such as c or sqrt(c)).
void validate_transcendental_arg(const Expr& arg);

/// Splits e = re + I*im with re, im free of I.
std::pair<Expr, Expr> split_imaginary(const Expr& e);

// ---- canonical forms and structure ----------------------------------------

/// Rebuilds every atom and product through the smart constructors. On
/// already-canonical input this is the identity.
Expr to_canonical(const Expr& e);

/// Structural order on atoms, independent of interning order.
bool structural_less(AtomRef a, AtomRef b);
bool structural_less(const Monomial& a, const Monomial& b);
bool structural_less(const Expr& a, const Expr& b);

/// Terms in deterministic structural order (for printing and reports).
std::vector<Term> sorted_terms(const Expr& e);

std::string to_string(AtomRef a);
std::string to_string(const Monomial& m);

// ---- calculus and rewriting -----------------------------------------------

/// Partial derivative with respect to a coordinate atom, treating every
/// other coordinate as independent. Chain rule through transcendental and
/// inverse atoms; d sqrt(c)/dc is handled through the root rewrite.
Expr derive(const Expr& e, AtomRef a);

/// Generic derivation: `d` supplies the derivative of each coordinate atom
/// (root atoms and I are treated as constants unless `d` handles them);
/// the product and chain rules are applied everywhere else.
Expr derivation(const Expr& e, const std::function<Expr(AtomRef)>& d);

/// Simultaneous substitution of coordinate atoms. Bindings must be acyclic
/// (an atom's image may not mention a bound atom, identity bindings
/// excepted); violation throws CyclicBindingError.
Expr substitute(const Expr& e, const std::map<AtomRef, Expr>& bindings);

/// Single-pass substitution driven by a callback (returns nullopt to keep an
/// atom). Used by rewriting engines that compute images lazily.
Expr substitute_with(const Expr& e, const std::function<std::optional<Expr>(AtomRef)>& image);

// ---- collection -----------------------------------------------------------

/// Splits each monomial into (classifying part, rest) and groups. The result
/// maps classifying monomials to coefficients free of classifying atoms.
std::map<Monomial, Expr> collect_by(const Expr& e, const std::function<bool(AtomRef)>& classifying);

/// Collects by an explicit family of class monomials (each given as a
/// monomial Expr with coefficient 1). Throws CollectError if the family has
/// duplicate classes or some term of e projects onto no listed class.
std::vector<std::pair<Expr, Expr>> collect_terms(const Expr& e, const std::vector<Expr>& family);

/// Polynomial view in a single coordinate atom: coefficient of a^k for each
/// k. Throws if a occurs inside a transcendental argument.
std::map<int, Expr> coefficients_in(const Expr& e, AtomRef a);

/// Exact division of polynomials in `var`. The divisor's leading
/// coefficient in `var` must be a nonzero rational. Returns (quotient,
/// remainder).
std::pair<Expr, Expr> divide_polynomial(const Expr& num, const Expr& den, AtomRef var);

/// Picks a coordinate atom in which `den` has a rational leading coefficient.
std::optional<AtomRef> division_variable(const Expr& den);

/// Rewrites powers of inv(den) against polynomial multiples of den wherever
/// the coefficient divides exactly.
Expr cancel_inverse(const Expr& e, const Expr& den);

}  // namespace lieforge

template <>
struct std::hash<lieforge::Monomial> {
  std::size_t operator()(const lieforge::Monomial& m) const noexcept { return m.hash(); }
};
