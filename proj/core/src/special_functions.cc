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

#include "lieforge/special_functions.h"

#include <array>
#include <cmath>
#include <numbers>

#include "lieforge/errors.h"

namespace lieforge::numeric {

JacobiTriple jacobi_elliptic(double u, double k) {
  k = std::fabs(k);
  if (!(k < 1.0)) throw DomainError("Jacobi modulus must satisfy |k| < 1");
  if (k == 0.0) return {std::sin(u), std::cos(u), 1.0};
  constexpr int kMax = 32;
  std::array<double, kMax + 1> a{};
  std::array<double, kMax + 1> c{};
  a[0] = 1.0;
  double b = std::sqrt(1.0 - k * k);
  c[0] = k;
  int n = 0;
  while (std::fabs(c[n]) > 1e-16 * a[n] && n < kMax) {
    a[n + 1] = 0.5 * (a[n] + b);
    c[n + 1] = 0.5 * (a[n] - b);
    b = std::sqrt(a[n] * b);
    ++n;
  }
  double phi = std::ldexp(a[n] * u, n);
  double phi_prev = phi;
  for (int j = n; j > 0; --j) {
    phi_prev = phi;
    phi = 0.5 * (phi + std::asin(c[j] / a[j] * std::sin(phi)));
  }
  double sn = std::sin(phi);
  double cn = std::cos(phi);
  double dn = cn / std::cos(phi_prev - phi);
  if (!std::isfinite(dn)) dn = std::sqrt(1.0 - k * k * sn * sn);
  return {sn, cn, dn};
}

double elliptic_k(double k) {
  k = std::fabs(k);
  if (!(k < 1.0)) throw DomainError("elliptic K requires |k| < 1");
  double a = 1.0;
  double b = std::sqrt(1.0 - k * k);
  for (int i = 0; i < 64 && std::fabs(a - b) > 1e-16 * a; ++i) {
    double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return std::numbers::pi / (2.0 * a);
}

}  // namespace lieforge::numeric
