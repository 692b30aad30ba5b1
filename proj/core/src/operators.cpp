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

#include "fraclap/operators.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fraclap/errors.hpp"
#include "fraclap/quadrature.hpp"
#include "fraclap/special.hpp"
#include "fraclap/symbol.hpp"
#include "fraclap/toeplitz.hpp"

namespace fraclap {

namespace {

// Fraction of the ball radius below which the symmetric pairing is
// replaced by its leading-order model: evaluating 2f(x)-f(x+h)-f(x-h)
// much below h ~ sqrt(ulp) returns pure cancellation noise.
constexpr double kBallFloor = 1e-2;  // in the substituted variable u, h = eps u^2

void validate_pv_config(const PvQuadratureConfig& cfg) {
  if (cfg.panels < 8) {
    throw DomainError("PvQuadratureConfig: panels must be >= 8");
  }
  if (!(cfg.tol > 0.0)) {
    throw DomainError("PvQuadratureConfig: tol must be positive");
  }
  if (cfg.cutoff && !(*cfg.cutoff > 0.0 && *cfg.cutoff < 0.1)) {
    throw DomainError("PvQuadratureConfig: cutoff must lie in (0, 0.1)");
  }
}

QuadratureOptions quad_options(const PvQuadratureConfig& cfg) {
  QuadratureOptions opt;
  opt.tol_abs = cfg.tol;
  opt.max_panels = cfg.panels;
  return opt;
}

double ball_radius(const PvQuadratureConfig& cfg, double x) {
  const double interior = std::min(x, 1.0 - x);
  if (cfg.cutoff) return std::min(*cfg.cutoff, interior / 2.0);
  return interior / 4.0;
}

}  // namespace

double apply_discrete(const AlphaParam& alpha, const GridFunction& f,
                      double x) {
  if (f.order() < 2) throw DomainError("apply_discrete: grid order must be >= 2");
  if (!(x > 0.0 && x < 1.0)) {
    throw DomainError("apply_discrete: x must lie in (0,1)");
  }
  const std::size_t n = f.order();
  const std::size_t k = floor_index(n, x);
  const std::vector<double>& c = phi_hat(alpha, n).c;
  double acc = 0.0;
  for (std::size_t l = 0; l <= n; ++l) {
    acc += c[k > l ? k - l : l - k] * f.at_node(l);
  }
  return std::pow(static_cast<double>(n), 2.0 * alpha.value()) * acc;
}

double reference_pv(const AlphaParam& alpha,
                    const std::function<double(double)>& f, double x,
                    const PvQuadratureConfig& cfg,
                    std::span<const double> breakpoints) {
  const double a = alpha.value();
  if (!(a > 0.0 && a < 1.0)) {
    throw DomainError("reference_pv: requires alpha in (0,1)");
  }
  if (!(x > 0.0 && x < 1.0)) {
    throw DomainError("reference_pv: x must lie in (0,1)");
  }
  validate_pv_config(cfg);

  const QuadratureOptions opt = quad_options(cfg);
  const double eps = ball_radius(cfg, x);
  const double fx = f(x);

  const auto outer = [&](double y) {
    return (fx - f(y)) * std::pow(std::abs(x - y), -1.0 - 2.0 * a);
  };
  const double left = adaptive_integrate(outer, 0.0, x - eps, opt, breakpoints);
  const double right = adaptive_integrate(outer, x + eps, 1.0, opt, breakpoints);

  // Singular ball by symmetric pairing, integrated in u with h = eps u^2.
  const auto pair = [&](double h) { return 2.0 * fx - f(x + h) - f(x - h); };
  const auto ball = [&](double u) {
    const double h = eps * u * u;
    return pair(h) * std::pow(h, -1.0 - 2.0 * a) * 2.0 * eps * u;
  };
  std::vector<double> ball_breaks;
  for (double p : breakpoints) {
    const double d = std::abs(p - x);
    if (d > 0.0 && d < eps) ball_breaks.push_back(std::sqrt(d / eps));
  }
  const double hc = eps * kBallFloor * kBallFloor;
  const double tail = pair(hc) * std::pow(hc, -2.0 * a) / (2.0 - 2.0 * a);
  const double ball_part =
      adaptive_integrate(ball, kBallFloor, 1.0, opt, ball_breaks) + tail;

  const double boundary =
      fx / (2.0 * a) * (std::pow(x, -2.0 * a) + std::pow(1.0 - x, -2.0 * a));
  return c1_constant(alpha) * (left + right + ball_part + boundary);
}

double riesz_integral(const AlphaParam& alpha_neg,
                      const std::function<double(double)>& h, double x,
                      const PvQuadratureConfig& cfg,
                      std::span<const double> breakpoints) {
  detail::require_negative(alpha_neg, "riesz_integral");
  const double a = alpha_neg.value();
  if (!(a > -0.5 && a < 0.0)) {
    throw DomainError("riesz_integral: requires alpha in (-1/2,0)");
  }
  if (!(x > 0.0 && x < 1.0)) {
    throw DomainError("riesz_integral: x must lie in (0,1)");
  }
  validate_pv_config(cfg);

  const QuadratureOptions opt = quad_options(cfg);
  const double p = -2.0 * a;  // kernel |t-x|^{p-1}, p in (0,1)
  // s = |t-x|^p turns each side into int h(t(s))/p ds: the Jacobian
  // cancels the kernel exactly.
  const auto one_side = [&](double sign, double extent) {
    const auto integrand = [&](double s) {
      return h(x + sign * std::pow(s, 1.0 / p)) / p;
    };
    std::vector<double> mapped;
    for (double b : breakpoints) {
      const double d = (b - x) * sign;
      if (d > 0.0 && d < extent) mapped.push_back(std::pow(d, p));
    }
    return adaptive_integrate(integrand, 0.0, std::pow(extent, p), opt,
                              mapped);
  };
  const double total = one_side(+1.0, 1.0 - x) + one_side(-1.0, x);
  return c_alpha(a) * total;
}

double rescale_interval(const AlphaParam& alpha, double a, double b,
                        const std::function<double(double)>& h, double u,
                        const PvQuadratureConfig& cfg) {
  if (!(a < b)) throw DomainError("rescale_interval: need a < b");
  if (!(u > a && u < b)) {
    throw DomainError("rescale_interval: u must lie in (a,b)");
  }
  const auto pullback = [&, a, b](double t) { return h(a + (b - a) * t); };
  const double unit_x = (u - a) / (b - a);
  if (alpha.regime() == Regime::Negative) {
    return riesz_integral(alpha, pullback, unit_x, cfg);
  }
  return reference_pv(alpha, pullback, unit_x, cfg);
}

}  // namespace fraclap
