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

#include "lieforge/parse.h"

#include <cctype>

namespace lieforge {
namespace {

struct Factor_ {
  Expr base;
  int exp = 1;
  bool negated = false;

  [[nodiscard]] Expr value() const {
    Expr v = pow(base, exp);
    return negated ? -v : v;
  }
  [[nodiscard]] Expr inverse_value() const {
    Expr v = exp >= 0 ? pow(reciprocal(base), exp) : pow(base, -exp);
    return negated ? -v : v;
  }
};

class Parser {
 public:
  Parser(std::string_view text, const JetSpec& spec) : text_(text), spec_(spec) {}

  Expr parse() {
    Expr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char ch) {
    if (peek() == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char ch) {
    if (!accept(ch)) fail(std::string("expected '") + ch + "'");
  }

  Expr expr() {
    Expr acc = term();
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Expr term() {
    Expr acc = factor().value();
    for (;;) {
      if (accept('*')) {
        acc = acc * factor().value();
      } else if (accept('/')) {
        std::size_t at = pos_;
        Factor_ f = factor();
        try {
          acc = acc * f.inverse_value();
        } catch (const DivisionByZeroError&) {
          throw ParseError("division by zero", at);
        }
      } else {
        return acc;
      }
    }
  }

  Factor_ factor() {
    if (accept('-')) {
      Factor_ f = factor();
      f.negated = !f.negated;
      return f;
    }
    if (accept('+')) return factor();
    Factor_ f;
    f.base = base();
    if (accept('^')) {
      bool neg = accept('-');
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      if (pos_ - start > 6) fail("exponent too large");
      f.exp = std::stoi(std::string(text_.substr(start, pos_ - start)));
      if (neg) f.exp = -f.exp;
    }
    return f;
  }

  Expr number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string digits(text_.substr(start, pos_ - start));
    Integer den(1);
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      std::size_t fs = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string frac(text_.substr(fs, pos_ - fs));
      digits += frac;
      for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    }
    if (digits.empty()) fail("malformed number");
    Rational q{Integer(digits), den};
    q.canonicalize();
    return Expr(q);
  }

  Expr base() {
    char ch = peek();
    if (ch == '(') {
      ++pos_;
      Expr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(ch))) return identifier();
    if (ch == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  Expr identifier() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    std::string derivs;
    bool underscore = false;
    if (pos_ < text_.size() && text_[pos_] == '_') {
      underscore = true;
      ++pos_;
      std::size_t ds = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      derivs = std::string(text_.substr(ds, pos_ - ds));
      if (derivs.empty()) fail("empty derivative index after '_'");
    }
    std::size_t primes = 0;
    while (pos_ < text_.size() && text_[pos_] == '\'') {
      ++primes;
      ++pos_;
    }
    if (!underscore && primes == 0 && peek() == '(') {
      std::size_t save = pos_;
      if (auto f = function(name)) return *f;
      pos_ = save;
    }
    if (underscore && primes > 0) fail("mixed derivative notations on '" + name + "'");
    if (primes > 0) {
      if (!spec_.is_ode()) throw ParseError("primes require a single independent variable", start);
      derivs = std::string(primes, spec_.independents[0][0]);
    }
    if (!underscore && primes == 0) {
      if (name == "I" && !spec_.is_parameter("I")) return imag();
      if (spec_.is_independent(name) || spec_.is_parameter(name)) return symbol(name);
      if (spec_.is_dependent(name)) return jet(name);
      if (spec_.is_unknown(name)) return unknown(name);
      throw UnknownIdentifierError(name, start);
    }
    for (char d : derivs) {
      if (!spec_.is_independent(std::string(1, d))) {
        throw ParseError("'" + std::string(1, d) + "' is not an independent variable", start);
      }
    }
    if (static_cast<int>(derivs.size()) > spec_.max_order + 4) {
      throw ParseError("derivative order too high", start);
    }
    if (spec_.is_dependent(name)) return jet(name, derivs);
    if (spec_.is_unknown(name)) return unknown(name, derivs);
    throw UnknownIdentifierError(name, start);
  }

  std::optional<Expr> function(const std::string& name) {
    static const char* kNames[] = {"sin", "cos", "tan", "exp", "sqrt", "sn", "cn", "dn"};
    bool known = false;
    for (const char* n : kNames) known = known || name == n;
    if (!known) return std::nullopt;
    std::size_t at = pos_;
    expect('(');
    Expr arg = expr();
    Expr modulus;
    bool jacobi = name == "sn" || name == "cn" || name == "dn";
    if (jacobi) {
      expect(',');
      modulus = expr();
    }
    expect(')');
    try {
      if (name == "sin") return sin(arg);
      if (name == "cos") return cos(arg);
      if (name == "tan") return tan(arg);
      if (name == "exp") return exp(arg);
      if (name == "sn") return jacobi_sn(arg, modulus);
      if (name == "cn") return jacobi_cn(arg, modulus);
      if (name == "dn") return jacobi_dn(arg, modulus);
    } catch (const ArgumentClassError& e) {
      throw ArgumentClassError(std::string(e.what()) + " at position " + std::to_string(at));
    }
    return sqrt_value(arg, at);
  }

  Expr sqrt_value(const Expr& arg, std::size_t at) {
    if (auto q = arg.as_rational()) {
      if (sgn(*q) >= 0 && mpz_perfect_square_p(q->get_num_mpz_t()) &&
          mpz_perfect_square_p(q->get_den_mpz_t())) {
        Integer n;
        Integer d;
        mpz_sqrt(n.get_mpz_t(), q->get_num_mpz_t());
        mpz_sqrt(d.get_mpz_t(), q->get_den_mpz_t());
        return Expr(Rational(n, d));
      }
    }
    if (arg.is_monomial() && arg.terms()[0].coef == 1 && arg.terms()[0].mono.factors().size() == 1) {
      const Factor& f = arg.terms()[0].mono.factors()[0];
      if (f.atom->kind == AtomKind::kSymbol && f.exp == 1 && spec_.is_parameter(f.atom->name)) {
        return sqrt_of(f.atom->name);
      }
    }
    throw ParseError("sqrt is supported for parameters and rational squares only", at);
  }

  std::string_view text_;
  const JetSpec& spec_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text, const JetSpec& spec) { return Parser(text, spec).parse(); }

}  // namespace lieforge
