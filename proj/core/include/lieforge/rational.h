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

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace lieforge {

/// Exact arbitrary-precision rational (always kept in lowest terms).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline std::size_t hash_value(const Rational& q) {
  auto limb = [](const mpz_class& z) -> std::size_t {
    if (mpz_size(z.get_mpz_t()) == 0) return 0;
    return static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), 0)) ^
           (static_cast<std::size_t>(mpz_sgn(z.get_mpz_t())) << 7);
  };
  return limb(q.get_num()) * 1000003u ^ limb(q.get_den());
}

}  // namespace lieforge
