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

#ifndef FRACLAP_SYMBOL_HPP_
#define FRACLAP_SYMBOL_HPP_

#include <cstddef>
#include <vector>

#include "fraclap/alpha.hpp"

namespace fraclap {

/// Fourier coefficients c[n] of the even symbol |1 - e^{i t}|^{2a},
/// n = 0..n_max.  Only nonnegative indices are stored; c[-n] = c[n].
struct SymbolCoefficients {
  AlphaParam alpha;
  std::vector<double> c;
};

/// Fourier coefficients b[u] of (1 - e^{i t})^{-a}, u = 0..u_max
/// (binomial series; defined for 0 < a < 1/2).
struct BetaCoefficients {
  AlphaParam alpha;
  std::vector<double> b;
};

/// Coefficients of |1 - e^{i t}|^{2a} by the two-term ratio recurrence
///   c[0]   = Gamma(2a+1) / Gamma(a+1)^2,
///   c[n+1] = c[n] (n - a) / (n + 1 + a).
/// The recurrence is pole-free and stable for every admissible regime
/// (the symbol stays integrable down to a > -1/2).  For large n,
/// n^{2a+1} c[n] -> C_a.
SymbolCoefficients phi_hat(const AlphaParam& alpha, std::size_t n_max);

/// Binomial coefficients of (1 - e^{i t})^{-a}:
///   b[0] = 1,  b[u] = b[u-1] (u - 1 + a) / u.
/// Requires the sub-half regime.  For large u, Gamma(a) u^{1-a} b[u] -> 1.
BetaCoefficients beta_coeff(const AlphaParam& alpha, std::size_t u_max);

}  // namespace fraclap

#endif  // FRACLAP_SYMBOL_HPP_
