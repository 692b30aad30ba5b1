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

#include <cmath>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "fraclap/alpha.hpp"
#include "fraclap/errors.hpp"
#include "fraclap/special.hpp"
#include "fraclap/symbol.hpp"

using fraclap::AlphaParam;
using fraclap::beta_coeff;
using fraclap::phi_hat;

namespace {

// Trapezoidal Fourier coefficient of |1-e^{it}|^{2a} = (2-2cos t)^a on a
// uniform grid; independent of the recurrence.
double coeff_by_quadrature(double a, int n, int nodes) {
  const double h = 2.0 * std::numbers::pi / nodes;
  double acc = 0.0;
  for (int i = 1; i < nodes; ++i) {  // endpoints contribute 0 (symbol zero)
    const double t = h * i;
    acc += std::pow(2.0 - 2.0 * std::cos(t), a) * std::cos(n * t);
  }
  return acc * h / (2.0 * std::numbers::pi);
}

}  // namespace

TEST_CASE("classical second-difference symbol at the alpha=1 hook") {
  const auto s = phi_hat(AlphaParam::unchecked(1.0), 6);
  CHECK(s.c[0] == 2.0);
  CHECK(s.c[1] == -1.0);
  for (int n = 2; n <= 6; ++n) CHECK(s.c[n] == 0.0);
}

TEST_CASE("head coefficient frozen from the quadrature oracle") {
  const auto s = phi_hat(AlphaParam(0.25), 0);
  CHECK(s.c[0] == doctest::Approx(1.0787052023767587).epsilon(1e-13));
}

TEST_CASE("recurrence agrees with symbol quadrature") {
  for (double a : {0.25, 0.75}) {
    const auto s = phi_hat(AlphaParam(a), 32);
    double worst = 0.0;
    for (int n : {0, 1, 2, 3, 8, 16, 32}) {
      worst = std::max(worst,
                       std::abs(s.c[n] - coeff_by_quadrature(a, n, 1000000)));
    }
    CHECK(worst < 1e-8);
  }
}

TEST_CASE("asymptotic law n^{2a+1} c[n] -> C_a") {
  const double a = 0.25;
  const std::size_t n = 100000;
  const auto s = phi_hat(AlphaParam(a), n);
  const double ratio =
      std::pow(static_cast<double>(n), 2.0 * a + 1.0) * s.c[n] /
      fraclap::c_alpha(a);
  CHECK(ratio == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("sign pattern of the coefficients") {
  for (double a : {0.25, 0.75}) {
    const auto s = phi_hat(AlphaParam(a), 64);
    CHECK(s.c[0] > 0.0);
    for (int n = 1; n <= 64; ++n) CHECK(s.c[n] < 0.0);
  }
  const auto neg = phi_hat(AlphaParam(-0.25), 64);
  for (int n = 0; n <= 64; ++n) CHECK(neg.c[n] > 0.0);
}

TEST_CASE("zero-sum tail bound") {
  // The symbol vanishes at 0, so c[0] + 2 sum c[n] -> 0 with the partial
  // sum controlled by the asymptotic tail C_a M^{-2a}/(2a) (slack 3).
  for (double a : {0.25, 0.75}) {
    const auto s = phi_hat(AlphaParam(a), 10000);
    const double ca = std::abs(fraclap::c_alpha(a));
    for (std::size_t m : {std::size_t{1000}, std::size_t{10000}}) {
      double partial = s.c[0];
      for (std::size_t n = 1; n <= m; ++n) partial += 2.0 * s.c[n];
      const double bound =
          3.0 * ca * std::pow(static_cast<double>(m), -2.0 * a) / (2.0 * a);
      CHECK(std::abs(partial) <= bound);
    }
  }
}

TEST_CASE("binomial series head and positivity") {
  const auto b = beta_coeff(AlphaParam(0.25), 1000);
  CHECK(b.b[0] == 1.0);
  CHECK(b.b[1] == 0.25);
  for (int u = 0; u <= 1000; ++u) CHECK(b.b[u] > 0.0);
}

TEST_CASE("binomial series asymptotics Gamma(a) u^{1-a} b[u] -> 1") {
  const double a = 0.25;
  const std::size_t u = 10000;
  const auto b = beta_coeff(AlphaParam(a), u);
  const double ratio = b.b[u] * fraclap::gamma_fn(a) *
                       std::pow(static_cast<double>(u), 1.0 - a);
  CHECK(ratio == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("binomial series requires the sub-half regime") {
  CHECK_THROWS_AS(beta_coeff(AlphaParam(0.75), 4), fraclap::DomainError);
  CHECK_THROWS_AS(beta_coeff(AlphaParam(-0.25), 4), fraclap::DomainError);
}
