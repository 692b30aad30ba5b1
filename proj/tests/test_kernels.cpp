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
#include <vector>

#include <doctest.h>

#include "fraclap/errors.hpp"
#include "fraclap/kernels.hpp"
#include "fraclap/special.hpp"
#include "support/oracles.hpp"

using fraclap::AlphaParam;
using fraclap::green_G;
using fraclap::kernel_H;
using fraclap::kernel_K;
using fraclap::KernelEvaluator;

namespace {

// Brute-force value of K through composite Simpson on the same mapped
// integrands, a million nodes each; no adaptivity, no shared code path.
double brute_K(double a, double u, double y) {
  const auto far = [&](double s) {
    if (s >= 1.0) return 1.0;  // limit of the mapped integrand
    const double t = 1.0 / (1.0 - s);
    return std::pow(t - u, a - 1.0) * std::pow(t - y, a - 1.0) *
           std::pow(t, 2.0 - 2.0 * a);
  };
  const double p = 1.0 - 2.0 * a;
  const auto near0 = [&](double s) {
    const double t = std::pow(p * s, 1.0 / p);
    return std::pow(t + u, a - 1.0) * std::pow(t + y, a - 1.0);
  };
  const double j = oracles::simpson(far, 0.0, 1.0, 1000000) +
                   oracles::simpson(near0, 0.0, 1.0 / p, 1000000);
  const auto near_tail = [&](double s) {
    if (s >= 1.0) return 1.0;
    const double t = 1.0 / (1.0 - s);
    return std::pow(t + u, a - 1.0) * std::pow(t + y, a - 1.0) *
           std::pow(t, 2.0 - 2.0 * a);
  };
  const double jt = oracles::simpson(near_tail, 0.0, 1.0, 1000000);
  const double g = std::tgamma(a);
  return std::pow(u, a) * std::pow(y, a) / (g * g) * (j + jt);
}

}  // namespace

TEST_CASE("classical Green function at the alpha=1 hook") {
  const KernelEvaluator ev(AlphaParam::unchecked(1.0), 1e-9);
  CHECK(green_G(ev, 0.25, 0.5) == doctest::Approx(0.125).epsilon(1e-12));
  double worst = 0.0;
  for (int i = 1; i <= 9; ++i) {
    for (int j = 1; j <= 9; ++j) {
      if (i == j) continue;
      const double x = 0.1 * i, y = 0.1 * j;
      const double exact = std::min(x, y) * (1.0 - std::max(x, y));
      worst = std::max(worst, std::abs(green_G(ev, x, y) - exact));
    }
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("Green kernel boundary values and diagonal") {
  const KernelEvaluator ev(AlphaParam(0.25));
  CHECK(green_G(ev, 0.0, 0.0) == 0.0);
  CHECK(green_G(ev, 0.0, 0.5) == 0.0);
  CHECK(green_G(ev, 1.0, 0.5) == 0.0);
  CHECK_THROWS_AS(green_G(ev, 0.4, 0.4), fraclap::DomainError);
  CHECK_THROWS_AS(green_G(ev, -0.1, 0.5), fraclap::DomainError);
}

TEST_CASE("Green kernel is symmetric and positive inside") {
  for (double a : {0.15, 0.25, 0.4}) {
    const KernelEvaluator ev{AlphaParam(a)};
    for (int i = 1; i <= 9; ++i) {
      for (int j = i + 1; j <= 9; ++j) {
        const double x = 0.1 * i, y = 0.1 * j;
        const double g1 = green_G(ev, x, y);
        const double g2 = green_G(ev, y, x);
        CHECK(g1 > 0.0);
        CHECK(std::abs(g1 - g2) <= 2.0 * ev.tol());
      }
    }
  }
}

TEST_CASE("frozen off-diagonal Green value") {
  const KernelEvaluator ev(AlphaParam(0.25), 1e-9);
  CHECK(green_G(ev, 0.4, 0.6) ==
        doctest::Approx(0.5865269826180136).epsilon(1e-8));
}

TEST_CASE("near-diagonal growth follows the 2a-1 power") {
  const KernelEvaluator ev(AlphaParam(0.25));
  std::vector<double> banded;
  for (double d : {1e-2, 1e-3, 1e-4}) {
    banded.push_back(green_G(ev, 0.4, 0.4 + d) * std::pow(d, 0.5));
  }
  const double lo = std::min({banded[0], banded[1], banded[2]});
  const double hi = std::max({banded[0], banded[1], banded[2]});
  CHECK(hi <= 4.0 * lo);
  // The scaled values approach the Riesz constant from below.
  CHECK(banded[2] == doctest::Approx(fraclap::c_alpha(-0.25)).epsilon(0.02));
}

TEST_CASE("correction kernel K against the brute-force oracle") {
  const KernelEvaluator ev(AlphaParam(0.25), 1e-9);
  const double got = kernel_K(ev, 0.4, 0.6);
  CHECK(got == doctest::Approx(brute_K(0.25, 0.4, 0.6)).epsilon(1e-6));
  CHECK(got == doctest::Approx(0.305535075458372).epsilon(1e-8));
  CHECK(kernel_K(ev, 0.4, 0.6) == kernel_K(ev, 0.6, 0.4));
  CHECK_THROWS_AS(kernel_K(ev, 0.0, 0.5), fraclap::DomainError);
  CHECK_THROWS_AS(kernel_K(ev, 0.5, 1.0), fraclap::DomainError);
}

TEST_CASE("K stays bounded near the diagonal") {
  // K is continuous there, so K(x, x+d) d^{1-a} must not grow as d
  // shrinks.
  const KernelEvaluator ev(AlphaParam(0.25));
  double prev = 1e300;
  for (double d : {1e-2, 1e-3, 1e-4}) {
    const double q = kernel_K(ev, 0.4, 0.4 + d) * std::pow(d, 0.75);
    CHECK(std::isfinite(q));
    CHECK(q < prev);
    prev = q;
  }
}

TEST_CASE("H reproduces G") {
  const KernelEvaluator ev(AlphaParam(0.25), 1e-7);
  CHECK(std::abs(kernel_H(ev, 0.4, 0.6) - green_G(ev, 0.4, 0.6)) <= 1e-4);
  CHECK(kernel_H(ev, 0.4, 0.6) == kernel_H(ev, 0.6, 0.4));
  CHECK_THROWS_AS(kernel_H(ev, 0.4, 0.4), fraclap::DomainError);
}

TEST_CASE("kernel table symmetry, diagonal sentinel, determinism") {
  const KernelEvaluator ev(AlphaParam(0.25));
  const auto t2 = fraclap::tabulate(ev, {0.3, 0.7}, {0.3, 0.7});
  CHECK(t2.G[t2.index(0, 1)] == t2.G[t2.index(1, 0)]);
  CHECK(t2.K[t2.index(0, 1)] == t2.K[t2.index(1, 0)]);
  CHECK(std::isnan(t2.H[t2.index(0, 0)]));
  CHECK(std::isnan(t2.H[t2.index(1, 1)]));
  CHECK(t2.G[t2.index(0, 1)] == green_G(ev, 0.3, 0.7));

  CHECK_THROWS_AS(fraclap::tabulate(ev, {0.7, 0.3}, {0.3, 0.7}),
                  fraclap::DomainError);
  CHECK_THROWS_AS(fraclap::tabulate(ev, {0.0, 0.5}, {0.3, 0.7}),
                  fraclap::DomainError);
}

TEST_CASE("evaluator validation") {
  CHECK_THROWS_AS(KernelEvaluator(AlphaParam(0.75)), fraclap::DomainError);
  CHECK_THROWS_AS(KernelEvaluator(AlphaParam(0.25), -1.0),
                  fraclap::DomainError);
  CHECK_THROWS_AS(KernelEvaluator(AlphaParam(0.25), 1e-7, 32),
                  fraclap::DomainError);
}
