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

#include <string>
#include <string_view>

#include "lieforge/expr.h"
#include "lieforge/jet.h"

namespace lieforge {

/// Parses the expression grammar
///
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := ('+'|'-') factor | base ('^' ['-'] integer)?
///   base   := number | ident | func '(' expr [',' expr] ')' | '(' expr ')'
///
/// Identifiers resolve against `spec`: independents and parameters become
/// symbols, dependents and unknowns become jet atoms (v, v_x, a_xx, and f',
/// f'' when the spec has a single independent). `I` is the imaginary unit.
/// Functions: sin cos tan exp sqrt sn cn dn.
Expr parse_expr(std::string_view text, const JetSpec& spec);

/// Text in the grammar accepted by parse_expr.
inline std::string print(const Expr& e) { return e.str(); }

}  // namespace lieforge
