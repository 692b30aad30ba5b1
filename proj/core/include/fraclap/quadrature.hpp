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

#ifndef FRACLAP_QUADRATURE_HPP_
#define FRACLAP_QUADRATURE_HPP_

#include <functional>
#include <span>

namespace fraclap {

/// Controls for the adaptive Gauss-Legendre engine.
struct QuadratureOptions {
  /// Absolute error budget for the whole interval, distributed over panels
  /// in proportion to their width.
  double tol_abs = 1e-9;
  /// Relative budget against the initial whole-interval estimate.  Keeps
  /// refinement decisions scale-invariant, so integrating c*f runs the
  /// same panel tree as f.
  double tol_rel = 1e-9;
  /// A panel is also accepted once its own two-level difference falls
  /// below this fraction of its value; algebraic tails would otherwise
  /// chase floating-point noise forever under a width-proportional budget.
  double panel_rel_floor = 1e-11;
  /// Refinement cap; exceeding it throws ConvergenceError.
  int max_panels = 4096;
};

/// Integrates f over [lo, hi] with 16-point Gauss-Legendre panels and
/// bisection driven by the two-level difference.  `breakpoints` seeds the
/// initial panel edges (interior kinks, knees of near-singular factors);
/// values outside (lo, hi) are ignored.  Returns 0 for an empty interval.
double adaptive_integrate(const std::function<double(double)>& f, double lo,
                          double hi, const QuadratureOptions& opt = {},
                          std::span<const double> breakpoints = {});

}  // namespace fraclap

#endif  // FRACLAP_QUADRATURE_HPP_
