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

#include "fraclap/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fraclap/errors.hpp"
#include "fraclap/kernels.hpp"
#include "fraclap/operators.hpp"
#include "fraclap/parallel.hpp"
#include "fraclap/quadrature.hpp"
#include "fraclap/special.hpp"
#include "fraclap/toeplitz.hpp"
#include "internal_kernels.hpp"

namespace fraclap {

namespace {

// Peak of exp(-1/(1-s^2)) * 2s/(1-s^2)^2 over s in (0,1); fixes the bump
// normalization so its Lipschitz constant is exactly the amplitude.
double bump_slope_peak() {
  static const double peak = [] {
    double best = 0.0;
    double s_best = 0.5;
    for (int i = 1; i < 20000; ++i) {
      const double s = static_cast<double>(i) / 20000.0;
      const double q = 1.0 - s * s;
      const double v = std::exp(-1.0 / q) * 2.0 * s / (q * q);
      if (v > best) {
        best = v;
        s_best = s;
      }
    }
    // Local refinement around the scan winner.
    double lo = s_best - 1e-4, hi = s_best + 1e-4;
    for (int it = 0; it < 200; ++it) {
      const double m1 = lo + (hi - lo) / 3.0;
      const double m2 = hi - (hi - lo) / 3.0;
      const auto val = [](double s) {
        const double q = 1.0 - s * s;
        return std::exp(-1.0 / q) * 2.0 * s / (q * q);
      };
      if (val(m1) < val(m2)) {
        lo = m1;
      } else {
        hi = m2;
      }
    }
    const double s = 0.5 * (lo + hi);
    const double q = 1.0 - s * s;
    return std::exp(-1.0 / q) * 2.0 * s / (q * q);
  }();
  return peak;
}

void check_support(double a, double b) {
  if (!(0.0 < a && a < b && b < 1.0)) {
    throw DomainError("TestFunctionSpec: support must satisfy 0 < a < b < 1");
  }
}

// Kernel-evaluation accuracy used inside the integral solver routes.
constexpr double kInnerKernelTol = 1e-7;

QuadratureOptions relative_options(const SolverOptions& opt) {
  QuadratureOptions q;
  q.tol_abs = 0.0;  // budgets scale with the integrand's own magnitude
  q.tol_rel = opt.tol;
  q.max_panels = opt.max_panels;
  return q;
}

void check_window(std::pair<double, double> window) {
  if (!(0.0 < window.first && window.first < window.second &&
        window.second < 1.0)) {
    throw DomainError("window must satisfy 0 < lo < hi < 1");
  }
}

}  // namespace

TestFunctionSpec::TestFunctionSpec(TestFunctionKind kind, double a, double b,
                                   double amplitude, double scale)
    : kind_(kind), a_(a), b_(b), amplitude_(amplitude), scale_(scale) {}

TestFunctionSpec TestFunctionSpec::hat(double a, double b, double amplitude) {
  check_support(a, b);
  return TestFunctionSpec(TestFunctionKind::Hat, a, b, amplitude, 1.0);
}

TestFunctionSpec TestFunctionSpec::smooth_bump(double a, double b,
                                               double amplitude) {
  check_support(a, b);
  // |f'| = amplitude * scale * peak * 2/(b-a) at the steepest point.
  const double scale = (b - a) / (2.0 * bump_slope_peak());
  return TestFunctionSpec(TestFunctionKind::SmoothBump, a, b, amplitude,
                          scale);
}

double TestFunctionSpec::operator()(double x) const {
  if (x <= a_ || x >= b_) return 0.0;
  if (kind_ == TestFunctionKind::Hat) {
    return amplitude_ * std::min(x - a_, b_ - x);
  }
  const double s = (2.0 * x - a_ - b_) / (b_ - a_);
  const double q = 1.0 - s * s;
  return amplitude_ * scale_ * std::exp(-1.0 / q);
}

double TestFunctionSpec::sup_norm() const {
  if (kind_ == TestFunctionKind::Hat) {
    return std::abs(amplitude_) * (b_ - a_) / 2.0;
  }
  return std::abs(amplitude_) * scale_ * std::exp(-1.0);
}

std::vector<double> TestFunctionSpec::kinks() const {
  if (kind_ == TestFunctionKind::Hat) {
    return {a_, 0.5 * (a_ + b_), b_};
  }
  return {a_, b_};
}

std::vector<double> solve_green(const AlphaParam& alpha,
                                const TestFunctionSpec& f,
                                std::span<const double> grid,
                                const SolverOptions& opt) {
  detail::require_subhalf(alpha, "solve_green");
  std::vector<double> out(grid.size(), 0.0);
  if (f.sup_norm() == 0.0) return out;

  const double a = alpha.value();
  const double lo = f.support_lo();
  const double hi = f.support_hi();
  const std::vector<double> kinks = f.kinks();
  const QuadratureOptions qopt = relative_options(opt);
  const KernelEvaluator ev(alpha, kInnerKernelTol, opt.max_panels);

  parallel_for(grid.size(), [&](std::size_t i) {
    const double x = grid[i];
    if (!(x >= 0.0 && x <= 1.0)) {
      throw DomainError("solve_green: grid points must lie in [0,1]");
    }
    if (x <= lo || x >= hi) {
      const auto integrand = [&](double y) { return green_G(ev, x, y) * f(y); };
      out[i] = adaptive_integrate(integrand, lo, hi, qopt, kinks);
      return;
    }
    // Split at y = x; s = |y-x|^{2a} turns the integrable |y-x|^{2a-1}
    // kernel growth into a bounded transformed integrand.  The gap
    // s^{1/p} is handed to the kernel exactly (detail::green_gap); going
    // through y = x + gap would quantize the gap at one ulp of x.
    const double p = 2.0 * a;
    const auto one_side = [&](double sign, double extent) {
      const auto integrand = [&](double s) {
        const double gap = std::pow(s, 1.0 / p);
        if (gap == 0.0) {
          // pow underflowed; the transformed integrand tends to
          // C_{-a} f(x) / p at the diagonal.
          return c_alpha(-a) * f(x) / p;
        }
        const double y = x + sign * gap;
        return detail::green_gap(ev, x, gap, sign > 0.0) * f(y) / p *
               std::pow(s, 1.0 / p - 1.0);
      };
      std::vector<double> mapped;
      for (double kink : kinks) {
        const double d = (kink - x) * sign;
        if (d > 0.0 && d < extent) mapped.push_back(std::pow(d, p));
      }
      return adaptive_integrate(integrand, 0.0, std::pow(extent, p), qopt,
                                mapped);
    };
    out[i] = one_side(+1.0, hi - x) + one_side(-1.0, x - lo);
  });
  return out;
}

std::vector<double> solve_riesz_correction(const AlphaParam& alpha,
                                           const TestFunctionSpec& f,
                                           std::span<const double> grid,
                                           const SolverOptions& opt) {
  detail::require_subhalf(alpha, "solve_riesz_correction");
  std::vector<double> out(grid.size(), 0.0);
  if (f.sup_norm() == 0.0) return out;

  const double a = alpha.value();
  const AlphaParam neg = alpha.is_unchecked()
                             ? AlphaParam::unchecked(-a)
                             : AlphaParam(-a);
  const std::vector<double> kinks = f.kinks();
  const QuadratureOptions qopt = relative_options(opt);
  const KernelEvaluator ev(alpha, kInnerKernelTol, opt.max_panels);

  // Absolute tolerance proportional to the data keeps the Riesz part
  // scale-covariant in f.
  PvQuadratureConfig riesz_cfg;
  riesz_cfg.tol = opt.tol * f.sup_norm();
  riesz_cfg.panels = opt.max_panels;

  parallel_for(grid.size(), [&](std::size_t i) {
    const double x = grid[i];
    if (!(x > 0.0 && x < 1.0)) {
      // The Riesz potential is formulated on the open interval; outside it
      // the solution extends by zero.
      out[i] = 0.0;
      return;
    }
    const double potential =
        riesz_integral(neg, [&](double t) { return f(t); }, x, riesz_cfg,
                       kinks);
    const auto correction = [&](double y) { return kernel_K(ev, x, y) * f(y); };
    const double corr = adaptive_integrate(correction, f.support_lo(),
                                           f.support_hi(), qopt, kinks);
    out[i] = potential - corr;
  });
  return out;
}

std::vector<double> solve_discrete(const AlphaParam& alpha,
                                   const TestFunctionSpec& f, std::size_t n) {
  detail::require_subhalf(alpha, "solve_discrete");
  if (n < 64) throw DomainError("solve_discrete: n must be >= 64");
  const SymToeplitz t = build_toeplitz(alpha, n);
  std::vector<double> rhs(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    rhs[k] = f(static_cast<double>(k) / static_cast<double>(n));
  }
  std::vector<double> x = levinson_solve(t, rhs);
  const double scale =
      std::pow(static_cast<double>(n), -2.0 * alpha.value());
  for (double& v : x) v *= scale;
  return x;
}

double residual_check(const AlphaParam& alpha, const GridFunction& g,
                      const TestFunctionSpec& f,
                      std::pair<double, double> window,
                      const SolverOptions& opt) {
  check_window(window);
  if (opt.residual_probes < 2) {
    throw DomainError("residual_check: need at least 2 probe points");
  }
  const double supf = f.sup_norm();
  const double denom = supf > 0.0 ? supf : 1.0;

  const std::vector<double> knots = g.interior_knots();
  PvQuadratureConfig cfg;
  cfg.tol = 1e-9 * std::max(1.0, supf);
  cfg.panels = std::max(opt.max_panels, 4 * static_cast<int>(g.order()));

  const int m = opt.residual_probes;
  std::vector<double> errs(m, 0.0);
  parallel_for(static_cast<std::size_t>(m), [&](std::size_t j) {
    const double x = window.first + (window.second - window.first) *
                                        static_cast<double>(j) /
                                        static_cast<double>(m - 1);
    const double pv = reference_pv(
        alpha, [&](double y) { return g.interp(y); }, x, cfg, knots);
    errs[j] = std::abs(pv - f(x));
  });
  return *std::max_element(errs.begin(), errs.end()) / denom;
}

double SolveReport::interior_max() const {
  double best = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < window.first || grid[i] > window.second) continue;
    best = std::max({best, std::abs(g_discrete[i]), std::abs(g_green[i]),
                     std::abs(g_riesz[i])});
  }
  return best;
}

SolveReport full_solve(const AlphaParam& alpha, const TestFunctionSpec& f,
                       std::size_t n, std::pair<double, double> window,
                       const SolverOptions& opt) {
  detail::require_subhalf(alpha, "full_solve");
  check_window(window);
  if (n < 64) throw DomainError("full_solve: n must be >= 64");

  // Uniform subsample of the n-grid: smallest stride dividing n that keeps
  // the report at <= 257 points (full grid if n is awkwardly prime).
  std::size_t stride = (n + 255) / 256;
  while (stride < n && n % stride != 0) ++stride;
  if (n / stride < 16) stride = 1;

  SolveReport report;
  report.alpha = alpha.value();
  report.n = n;
  report.window = window;
  const std::size_t m = n / stride;
  report.grid.resize(m + 1);
  for (std::size_t j = 0; j <= m; ++j) {
    report.grid[j] = static_cast<double>(j * stride) / static_cast<double>(n);
  }

  const std::vector<double> dense = solve_discrete(alpha, f, n);
  report.g_discrete.resize(m + 1);
  for (std::size_t j = 0; j <= m; ++j) {
    report.g_discrete[j] = dense[j * stride];
  }
  report.g_green = solve_green(alpha, f, report.grid, opt);
  report.g_riesz = solve_riesz_correction(alpha, f, report.grid, opt);

  double dg = 0.0, dr = 0.0, gr = 0.0;
  for (std::size_t j = 0; j <= m; ++j) {
    const double x = report.grid[j];
    if (x < window.first || x > window.second) continue;
    dg = std::max(dg, std::abs(report.g_discrete[j] - report.g_green[j]));
    dr = std::max(dr, std::abs(report.g_discrete[j] - report.g_riesz[j]));
    gr = std::max(gr, std::abs(report.g_green[j] - report.g_riesz[j]));
  }
  report.pairwise_sup_dg = dg;
  report.pairwise_sup_dr = dr;
  report.pairwise_sup_gr = gr;

  report.residual_sup = residual_check(
      alpha, GridFunction(m, report.g_green), f, window, opt);
  return report;
}

}  // namespace fraclap
