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

#include "fraclap/kernels.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "fraclap/errors.hpp"
#include "fraclap/parallel.hpp"
#include "fraclap/quadrature.hpp"
#include "fraclap/special.hpp"

namespace fraclap {

KernelEvaluator::KernelEvaluator(AlphaParam alpha, double tol, int max_panels)
    : alpha_(alpha), tol_(tol), max_panels_(max_panels) {
  detail::require_subhalf(alpha_, "KernelEvaluator");
  if (!(tol_ > 0.0)) throw DomainError("KernelEvaluator: tol must be positive");
  if (max_panels_ < 64) {
    throw DomainError("KernelEvaluator: max_panels must be >= 64");
  }
}

namespace {

QuadratureOptions quad_options(const KernelEvaluator& ev) {
  QuadratureOptions opt;
  opt.tol_abs = ev.tol();
  opt.max_panels = ev.max_panels();
  return opt;
}

}  // namespace

namespace {

// Shared Green-kernel core with the diagonal gap hi-lo passed explicitly.
double green_core(const KernelEvaluator& ev, double lo, double hi,
                  double gap) {
  const double a = ev.alpha().value();
  if (hi >= 1.0 || lo <= 0.0) return 0.0;

  // t = hi + s^{1/a} absorbs the (t-hi)^{a-1} endpoint exactly; the other
  // factor is evaluated as (gap + s^{1/a})^{a-1}, never by re-subtracting
  // nearly equal t and lo.
  const double s_max = std::pow(1.0 - hi, a);
  const auto integrand = [&](double s) {
    const double u = std::pow(s, 1.0 / a);
    return std::pow(gap + u, a - 1.0) * std::pow(hi + u, -2.0 * a);
  };
  const double knee = std::pow(gap, a);
  std::vector<double> breaks;
  if (knee < 0.5 * s_max) breaks = {knee, std::min(8.0 * knee, 0.75 * s_max)};

  const double integral =
      adaptive_integrate(integrand, 0.0, s_max, quad_options(ev), breaks) / a;
  const double g = gamma_fn(a);
  return std::pow(lo, a) * std::pow(hi, a) / (g * g) * integral;
}

}  // namespace

double green_G(const KernelEvaluator& ev, double x, double y) {
  if (x == 0.0 && y == 0.0) return 0.0;
  if (!(x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 1.0)) {
    throw DomainError("green_G: (x,y) must lie in [0,1]^2");
  }
  const double hi = std::max(x, y);
  const double lo = std::min(x, y);
  if (hi >= 1.0 || lo <= 0.0) return 0.0;
  if (hi == lo) {
    throw DomainError("green_G: interior diagonal x == y is excluded");
  }
  return green_core(ev, lo, hi, hi - lo);
}

namespace detail {

double green_gap(const KernelEvaluator& ev, double x, double gap,
                 bool right) {
  const double lo = right ? x : x - gap;
  const double hi = right ? x + gap : x;
  if (!(gap > 0.0)) {
    throw DomainError("green_gap: gap must be positive");
  }
  return green_core(ev, lo, hi, gap);
}

}  // namespace detail

double kernel_K(const KernelEvaluator& ev, double u, double y) {
  const double a = ev.alpha().value();
  if (!(u > 0.0 && u < 1.0 && y > 0.0 && y < 1.0)) {
    throw DomainError("kernel_K: (u,y) must lie in (0,1)^2");
  }
  const QuadratureOptions opt = quad_options(ev);

  // int_1^inf (t-u)^{a-1}(t-y)^{a-1} t^{-2a} dt; the integrand decays like
  // t^{-2}, so t = 1/(1-s) maps it to a bounded function on [0,1).
  const auto far = [&](double s) {
    const double t = 1.0 / (1.0 - s);
    return std::pow(t - u, a - 1.0) * std::pow(t - y, a - 1.0) *
           std::pow(t, 2.0 - 2.0 * a);
  };
  const double j1 = adaptive_integrate(far, 0.0, 1.0, opt);

  // int_0^inf (t+u)^{a-1}(t+y)^{a-1} t^{-2a} dt split at t = 1; the
  // integrable t^{-2a} endpoint is removed by s = t^{1-2a}/(1-2a).
  const double p = 1.0 - 2.0 * a;
  const auto near0 = [&](double s) {
    const double t = std::pow(p * s, 1.0 / p);
    return std::pow(t + u, a - 1.0) * std::pow(t + y, a - 1.0);
  };
  const double j2a = adaptive_integrate(near0, 0.0, 1.0 / p, opt);
  const auto near_tail = [&](double s) {
    const double t = 1.0 / (1.0 - s);
    return std::pow(t + u, a - 1.0) * std::pow(t + y, a - 1.0) *
           std::pow(t, 2.0 - 2.0 * a);
  };
  const double j2b = adaptive_integrate(near_tail, 0.0, 1.0, opt);

  const double g = gamma_fn(a);
  return std::pow(u, a) * std::pow(y, a) / (g * g) * (j1 + j2a + j2b);
}

double kernel_H(const KernelEvaluator& ev, double x, double y) {
  if (x == y) throw DomainError("kernel_H: x == y is excluded");
  const double a = ev.alpha().value();
  return c_alpha(-a) * std::pow(std::abs(x - y), 2.0 * a - 1.0) -
         kernel_K(ev, x, y);
}

KernelTable tabulate(const KernelEvaluator& ev, std::vector<double> xs,
                     std::vector<double> ys) {
  const auto check_grid = [](const std::vector<double>& g, const char* name) {
    if (g.empty()) throw DomainError(std::string("tabulate: empty grid ") + name);
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (!(g[i] > 0.0 && g[i] < 1.0)) {
        throw DomainError(std::string("tabulate: grid ") + name +
                          " must lie strictly inside (0,1)");
      }
      if (i > 0 && !(g[i] > g[i - 1])) {
        throw DomainError(std::string("tabulate: grid ") + name +
                          " must be strictly increasing");
      }
    }
  };
  check_grid(xs, "xs");
  check_grid(ys, "ys");

  KernelTable table;
  table.alpha = ev.alpha().value();
  table.xs = std::move(xs);
  table.ys = std::move(ys);
  const std::size_t nx = table.xs.size();
  const std::size_t ny = table.ys.size();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  table.G.assign(nx * ny, 0.0);
  table.K.assign(nx * ny, 0.0);
  table.H.assign(nx * ny, nan);

  const bool shared = table.xs == table.ys;
  parallel_for(nx, [&](std::size_t i) {
    const double x = table.xs[i];
    const std::size_t j0 = shared ? i : 0;
    for (std::size_t j = j0; j < ny; ++j) {
      const double y = table.ys[j];
      const std::size_t idx = table.index(i, j);
      if (x == y) {
        // G and K are finite only off the interior diagonal; H is left as
        // the NaN sentinel.
        table.G[idx] = nan;
        table.K[idx] = nan;
        continue;
      }
      table.G[idx] = green_G(ev, x, y);
      table.K[idx] = kernel_K(ev, x, y);
      table.H[idx] = c_alpha(-table.alpha) *
                         std::pow(std::abs(x - y), 2.0 * table.alpha - 1.0) -
                     table.K[idx];
    }
  });
  if (shared) {
    for (std::size_t i = 0; i < nx; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        table.G[table.index(i, j)] = table.G[table.index(j, i)];
        table.K[table.index(i, j)] = table.K[table.index(j, i)];
        table.H[table.index(i, j)] = table.H[table.index(j, i)];
      }
    }
  }
  return table;
}

}  // namespace fraclap
