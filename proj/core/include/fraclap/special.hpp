// Copyright 2026 The fraclap authors
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

#ifndef FRACLAP_SPECIAL_HPP_
#define FRACLAP_SPECIAL_HPP_

#include "fraclap/alpha.hpp"

namespace fraclap {

/// Real gamma function.
///
/// Lanczos series (g = 607/128, 15 terms) with the reflection formula for
/// x < 1/2; small positive integers take an exact factorial path.  Relative
/// accuracy is a few 1e-15 on (0, 10].  Poles (x a nonpositive integer)
/// throw DomainError.
double gamma_fn(double x);

/// Normalization constant of the singular-integral operator,
///   C_1(a) = 2^{2a} Gamma((1+2a)/2) / (sqrt(pi) |Gamma(-a)|),
/// with |Gamma(-a)| evaluated through Gamma(1-a)/a to stay clear of the
/// pole lattice.  Defined for the positive regimes only.
double c1_constant(const AlphaParam& alpha);

/// The symbol-asymptotics constant
///   C_b = -Gamma(2b+1) sin(pi b) / pi,
/// accepted on (-1,0) u (0,1).  Negative for b in (0,1), positive for
/// b in (-1/2,0).  Satisfies C_a = -C_1(a) on (0,1).
double c_alpha(double beta);

}  // namespace fraclap

#endif  // FRACLAP_SPECIAL_HPP_
