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

#include "fraclap/special.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fraclap/errors.hpp"

namespace fraclap {

namespace {

// Godfrey's 15-term Lanczos coefficients, g = 607/128.
constexpr double kLanczosBase = 607.0 / 128.0 + 0.5;  // 5.2421875
constexpr double kLanczosSer0 = 0.999999999999997092;
constexpr double kSqrtTwoPi = 2.5066282746310005;
constexpr double kLanczos[14] = {
    57.1562356658629235,     -59.5979603554754912,
    14.1360979747417471,     -0.491913816097620199,
    0.339946499848118887e-4, 0.465236289270485756e-4,
    -0.983744753048795646e-4, 0.158088703224912494e-3,
    -0.210264441724104883e-3, 0.217439618115212643e-3,
    -0.164318106536763890e-3, 0.844182239838527433e-4,
    -0.261908384015814087e-4, 0.368991826595316234e-5};

// Gamma(k) = (k-1)! for k = 1..21, exact in double.
constexpr double kFactorialGamma[21] = {
    1.0,
    1.0,
    2.0,
    6.0,
    24.0,
    120.0,
    720.0,
    5040.0,
    40320.0,
    362880.0,
    3628800.0,
    39916800.0,
    479001600.0,
    6227020800.0,
    87178291200.0,
    1307674368000.0,
    20922789888000.0,
    355687428096000.0,
    6402373705728000.0,
    121645100408832000.0,
    2432902008176640000.0};

double lanczos_gamma_positive(double x) {
  // x >= 0.5
  double tmp = x + kLanczosBase;
  tmp = (x + 0.5) * std::log(tmp) - tmp;
  double ser = kLanczosSer0;
  double y = x;
  for (double c : kLanczos) {
    y += 1.0;
    ser += c / y;
  }
  return std::exp(tmp) * kSqrtTwoPi * ser / x;
}

}  // namespace

double gamma_fn(double x) {
  if (!std::isfinite(x)) throw DomainError("gamma_fn: non-finite argument");
  if (x <= 0.0 && x == std::floor(x)) {
    throw DomainError("gamma_fn: pole at " + std::to_string(x));
  }
  if (x == std::floor(x) && x >= 1.0 && x <= 21.0) {
    return kFactorialGamma[static_cast<int>(x) - 1];
  }
  if (x < 0.5) {
    // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
    return std::numbers::pi /
           (std::sin(std::numbers::pi * x) * lanczos_gamma_positive(1.0 - x));
  }
  return lanczos_gamma_positive(x);
}

double c1_constant(const AlphaParam& alpha) {
  detail::require_positive_regime(alpha, "c1_constant");
  const double a = alpha.value();
  // |Gamma(-a)| = Gamma(1-a)/a for a in (0,1).
  const double abs_gamma_neg = gamma_fn(1.0 - a) / a;
  return std::pow(2.0, 2.0 * a) * gamma_fn(0.5 + a) /
         (std::sqrt(std::numbers::pi) * abs_gamma_neg);
}

double c_alpha(double beta) {
  if (!std::isfinite(beta) || beta == 0.0 || beta <= -1.0 || beta >= 1.0) {
    throw DomainError("c_alpha: beta must lie in (-1,0) u (0,1), got " +
                      std::to_string(beta));
  }
  return -gamma_fn(2.0 * beta + 1.0) * std::sin(std::numbers::pi * beta) /
         std::numbers::pi;
}

}  // namespace fraclap
