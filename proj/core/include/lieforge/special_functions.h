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

namespace lieforge::numeric {

struct JacobiTriple {
  double sn;
  double cn;
  double dn;
};

/// sn, cn, dn of modulus k (0 <= |k| < 1) by the arithmetic-geometric mean
/// with descending Landen transformations. Throws DomainError for |k| >= 1.
JacobiTriple jacobi_elliptic(double u, double k);

/// Complete elliptic integral of the first kind K(k) = pi / (2 AGM(1, k')).
double elliptic_k(double k);

}  // namespace lieforge::numeric
