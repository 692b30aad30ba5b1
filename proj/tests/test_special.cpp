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

#include <doctest.h>

#include "fraclap/alpha.hpp"
#include "fraclap/errors.hpp"
#include "fraclap/special.hpp"

using fraclap::AlphaParam;
using fraclap::c1_constant;
using fraclap::c_alpha;
using fraclap::gamma_fn;

TEST_CASE("gamma matches the system gamma to 1e-13 relative on (0,10]") {
  double worst = 0.0;
  for (int i = 1; i <= 2000; ++i) {
    const double x = 0.005 * i;
    const double ref = std::tgamma(x);
    worst = std::max(worst, std::abs(gamma_fn(x) - ref) / ref);
  }
  CHECK(worst < 1e-13);
}

TEST_CASE("gamma hits small integers exactly") {
  double fact = 1.0;
  for (int k = 1; k <= 21; ++k) {
    CHECK(gamma_fn(static_cast<double>(k)) == fact);
    fact *= static_cast<double>(k);
  }
}

TEST_CASE("gamma reflection covers negative non-integers") {
  for (double x : {-0.25, -0.75, -1.5, -2.3}) {
    const double ref = std::tgamma(x);
    CHECK(std::abs(gamma_fn(x) - ref) <= 1e-13 * std::abs(ref));
  }
}

TEST_CASE("gamma poles throw") {
  CHECK_THROWS_AS(gamma_fn(0.0), fraclap::DomainError);
  CHECK_THROWS_AS(gamma_fn(-1.0), fraclap::DomainError);
  CHECK_THROWS_AS(gamma_fn(-7.0), fraclap::DomainError);
}

TEST_CASE("alpha validation") {
  CHECK_THROWS_AS(AlphaParam(0.0), fraclap::DomainError);
  CHECK_THROWS_AS(AlphaParam(0.5), fraclap::DomainError);
  CHECK_THROWS_AS(AlphaParam(-0.5), fraclap::DomainError);
  CHECK_THROWS_AS(AlphaParam(1.0), fraclap::DomainError);
  CHECK_THROWS_AS(AlphaParam(-0.7), fraclap::DomainError);
  CHECK_THROWS_AS(AlphaParam(1.2), fraclap::DomainError);

  CHECK(AlphaParam(-0.25).regime() == fraclap::Regime::Negative);
  CHECK(AlphaParam(0.25).regime() == fraclap::Regime::SubHalf);
  CHECK(AlphaParam(0.75).regime() == fraclap::Regime::SuperHalf);

  const AlphaParam hook = AlphaParam::unchecked(1.0);
  CHECK(hook.value() == 1.0);
  CHECK(hook.is_unchecked());
}

TEST_CASE("c1_constant at 0.25 against an independent gamma route") {
  // 2^{1/2} Gamma(3/4) / (sqrt(pi) |Gamma(-1/4)|), system gamma as oracle.
  const double oracle = std::pow(2.0, 0.5) * std::tgamma(0.75) /
                        (std::sqrt(std::numbers::pi) *
                         std::abs(std::tgamma(-0.25)));
  const double got = c1_constant(AlphaParam(0.25));
  CHECK(got == doctest::Approx(0.19947114020071635).epsilon(1e-12));
  CHECK(std::abs(got - oracle) <= 1e-13 * oracle);
}

TEST_CASE("c1_constant is deterministic and rejects the negative regime") {
  const AlphaParam a(0.25);
  CHECK(c1_constant(a) == c1_constant(a));
  CHECK_THROWS_AS(c1_constant(AlphaParam(-0.25)), fraclap::DomainError);
}

TEST_CASE("c_alpha frozen values from the gamma/sine oracle") {
  // -Gamma(3/2) sin(pi/4) / pi
  const double oracle_pos = -std::tgamma(1.5) * std::sin(std::numbers::pi / 4) /
                            std::numbers::pi;
  CHECK(c_alpha(0.25) == doctest::Approx(oracle_pos).epsilon(1e-13));
  CHECK(c_alpha(0.25) == doctest::Approx(-0.19947114020071635).epsilon(1e-12));

  // Gamma(1/2) sin(pi/4) / pi = 1/sqrt(2 pi)
  const double oracle_neg = std::tgamma(0.5) * std::sin(std::numbers::pi / 4) /
                            std::numbers::pi;
  CHECK(c_alpha(-0.25) == doctest::Approx(oracle_neg).epsilon(1e-13));
  CHECK(c_alpha(-0.25) ==
        doctest::Approx(0.3989422804014327).epsilon(1e-12));
}

TEST_CASE("c_alpha sign pattern") {
  for (int i = 1; i < 20; ++i) {
    const double b = i * 0.05;
    CHECK(c_alpha(b) < 0.0);
  }
  for (int i = 1; i < 10; ++i) {
    const double b = -i * 0.049;
    CHECK(c_alpha(b) > 0.0);
  }
}

TEST_CASE("c_alpha domain") {
  CHECK_THROWS_AS(c_alpha(0.0), fraclap::DomainError);
  CHECK_THROWS_AS(c_alpha(1.0), fraclap::DomainError);
  CHECK_THROWS_AS(c_alpha(-1.0), fraclap::DomainError);
  CHECK_THROWS_AS(c_alpha(1.5), fraclap::DomainError);
}

TEST_CASE("constant identity C_1(a) = -C_a across both positive regimes") {
  for (int i = 0; i < 10; ++i) {
    for (double base : {0.025, 0.525}) {
      const double a = base + 0.05 * i;
      const AlphaParam alpha(a);
      const double ca = c_alpha(a);
      CHECK(std::abs(c1_constant(alpha) + ca) <= 1e-10 * std::abs(ca));
    }
  }
}
