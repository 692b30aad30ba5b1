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

#ifndef FRACLAP_SOLVER_HPP_
#define FRACLAP_SOLVER_HPP_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "fraclap/alpha.hpp"
#include "fraclap/grid_function.hpp"

namespace fraclap {

enum class TestFunctionKind { Hat, SmoothBump };

/// Right-hand sides admissible for the solvers: Lipschitz constant <= 1
/// (times |amplitude|) and compact support [a,b] inside (0,1).
///
///   Hat:        f(x) = amplitude * max(0, min(x-a, b-x)); slope exactly 1.
///   SmoothBump: f(x) = amplitude * c * exp(-1/(1-s^2)),
///               s = (2x-a-b)/(b-a), with c fixed numerically so the
///               Lipschitz constant is 1.
class TestFunctionSpec {
 public:
  static TestFunctionSpec hat(double a, double b, double amplitude = 1.0);
  static TestFunctionSpec smooth_bump(double a, double b,
                                      double amplitude = 1.0);

  double operator()(double x) const;

  TestFunctionKind kind() const { return kind_; }
  double support_lo() const { return a_; }
  double support_hi() const { return b_; }
  double amplitude() const { return amplitude_; }
  /// sup |f| over [0,1].
  double sup_norm() const;
  /// Kink locations (quadrature breakpoints): support endpoints, plus the
  /// apex for the hat.
  std::vector<double> kinks() const;

 private:
  TestFunctionSpec(TestFunctionKind kind, double a, double b,
                   double amplitude, double scale);

  TestFunctionKind kind_;
  double a_;
  double b_;
  double amplitude_;
  double scale_;  // bump normalization; 1 for the hat
};

struct SolverOptions {
  /// Relative tolerance for the integral routes (scale-invariant, so
  /// solving for c*f returns exactly c times the solution for dyadic c).
  double tol = 1e-8;
  int max_panels = 4096;
  /// Number of probe points for residual_check.
  int residual_probes = 13;
};

/// Green route: g(x) = int_a^b G_a(x,y) f(y) dy per grid point.  The
/// integrable |x-y|^{2a-1} behaviour at y = x is absorbed by the power
/// substitution s = |y-x|^{2a} on each side.  Sub-half regime only.
std::vector<double> solve_green(const AlphaParam& alpha,
                                const TestFunctionSpec& f,
                                std::span<const double> grid,
                                const SolverOptions& opt = {});

/// Riesz-minus-correction route:
///   g(z) = C_{-a} int f(t) |t-z|^{2a-1} dt - int_a^b K_a(z,y) f(y) dy.
std::vector<double> solve_riesz_correction(const AlphaParam& alpha,
                                           const TestFunctionSpec& f,
                                           std::span<const double> grid,
                                           const SolverOptions& opt = {});

/// Discrete route: samples f on the (n+1)-point grid, solves
/// T_n x = f by Levinson, returns n^{-2a} x.
std::vector<double> solve_discrete(const AlphaParam& alpha,
                                   const TestFunctionSpec& f, std::size_t n);

/// Applies the PV evaluator to the piecewise-linear extension-by-zero of a
/// solution vector and returns
///   sup_{x in window probes} |pv(g)(x) - f(x)| / sup|f|.
/// The interpolant's limited smoothness bounds the achievable residual.
double residual_check(const AlphaParam& alpha, const GridFunction& g,
                      const TestFunctionSpec& f,
                      std::pair<double, double> window,
                      const SolverOptions& opt = {});

/// All three routes on a shared evaluation grid, with their pairwise
/// sup-distances over the window and the PV residual of the Green route.
struct SolveReport {
  double alpha = 0.0;
  std::size_t n = 0;
  std::pair<double, double> window{0.2, 0.8};
  std::vector<double> grid;
  std::vector<double> g_discrete;
  std::vector<double> g_green;
  std::vector<double> g_riesz;
  double pairwise_sup_dg = 0.0;  // discrete vs green
  double pairwise_sup_dr = 0.0;  // discrete vs riesz
  double pairwise_sup_gr = 0.0;  // green vs riesz
  double residual_sup = 0.0;

  /// max |g| over window grid points, across all three routes.
  double interior_max() const;

  bool operator==(const SolveReport&) const = default;
};

/// Runs the three solvers on a uniform subsample of the n-grid (stride
/// chosen so the report stays around <= 257 points) and fills the report.
SolveReport full_solve(const AlphaParam& alpha, const TestFunctionSpec& f,
                       std::size_t n,
                       std::pair<double, double> window = {0.2, 0.8},
                       const SolverOptions& opt = {});

}  // namespace fraclap

#endif  // FRACLAP_SOLVER_HPP_
