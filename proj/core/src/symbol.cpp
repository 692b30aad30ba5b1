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

#include "fraclap/symbol.hpp"

#include "fraclap/special.hpp"

namespace fraclap {

SymbolCoefficients phi_hat(const AlphaParam& alpha, std::size_t n_max) {
  const double a = alpha.value();
  std::vector<double> c(n_max + 1);
  const double g1 = gamma_fn(a + 1.0);
  c[0] = gamma_fn(2.0 * a + 1.0) / (g1 * g1);
  for (std::size_t n = 0; n < n_max; ++n) {
    const double dn = static_cast<double>(n);
    c[n + 1] = c[n] * (dn - a) / (dn + 1.0 + a);
    if (c[n + 1] == 0.0) c[n + 1] = 0.0;  // flush -0 at integer orders
  }
  return SymbolCoefficients{alpha, std::move(c)};
}

BetaCoefficients beta_coeff(const AlphaParam& alpha, std::size_t u_max) {
  detail::require_subhalf(alpha, "beta_coeff");
  const double a = alpha.value();
  std::vector<double> b(u_max + 1);
  b[0] = 1.0;
  for (std::size_t u = 1; u <= u_max; ++u) {
    const double du = static_cast<double>(u);
    b[u] = b[u - 1] * (du - 1.0 + a) / du;
  }
  return BetaCoefficients{alpha, std::move(b)};
}

}  // namespace fraclap
