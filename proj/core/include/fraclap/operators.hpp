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

#ifndef FRACLAP_OPERATORS_HPP_
#define FRACLAP_OPERATORS_HPP_

#include <functional>
#include <optional>
#include <span>

#include "fraclap/alpha.hpp"
#include "fraclap/grid_function.hpp"

namespace fraclap {

/// Configuration of the principal-value evaluator.
struct PvQuadratureConfig {
  /// Radius of the singular ball around x.  Unset means min(x,1-x)/4; a
  /// set value is clamped below min(x,1-x)/2 and must lie in (0, 0.1).
  std::optional<double> cutoff;
  /// Adaptive panel cap per smooth piece (>= 8).
  int panels = 4096;
  /// Absolute tolerance target per integral piece.
  double tol = 1e-9;
};

/// Finite-n discrete operator: n^{2a} times the dot product of row [nx] of
/// the symbol's Toeplitz matrix with the grid samples (n = f.order()).
/// The limit n -> infinity is studied by sweeping n; x is effectively
/// snapped to the grid through [nx].
double apply_discrete(const AlphaParam& alpha, const GridFunction& f,
                      double x);

/// Interval operator of order a in (0,1/2) u (1/2,1):
///   C_1(a) ( PV int_0,1 (f(x)-f(y)) |x-y|^{-1-2a} dy
///            + f(x)/(2a) (x^{-2a} + (1-x)^{-2a}) ).
///
/// The PV integral is split at distance eps from x.  Outside the ball the
/// integrand is quadratured adaptively; inside, the symmetric pairing
///   h -> (2 f(x) - f(x+h) - f(x-h)) h^{-1-2a}
/// turns the principal value into a proper integral (for locally C^2
/// integrands the pairing behaves like h^{1-2a}).  The pairing loses all
/// precision to cancellation below h ~ sqrt(ulp), so the innermost slice
/// [0, h_c] is replaced by its leading-order model
/// pair(h_c) h_c^{-2a} / (2-2a).
///
/// f must be Holder of order > 2a near x; this cannot be checked at
/// runtime and is the caller's responsibility.  `breakpoints` lists
/// interior kinks of f so panels never straddle them.
double reference_pv(const AlphaParam& alpha,
                    const std::function<double(double)>& f, double x,
                    const PvQuadratureConfig& cfg = {},
                    std::span<const double> breakpoints = {});

/// Negative-regime operator (a in (-1/2,0)):
///   C_a int_0,1 h(t) |t-x|^{-1-2a} dt.
/// The integrable singularity at t = x is removed exactly by the power
/// substitution s = |t-x|^{-2a} on each side (the Jacobian cancels the
/// kernel, leaving h(t(s))/(-2a)).
double riesz_integral(const AlphaParam& alpha_neg,
                      const std::function<double(double)>& h, double x,
                      const PvQuadratureConfig& cfg = {},
                      std::span<const double> breakpoints = {});

/// Operator transported to (a,b): evaluates the unit-interval operator on
/// the pullback h_{a,b}(x) = h(a + (b-a)x) at (u-a)/(b-a).  No extra
/// (b-a)^{-2a} factor is applied; the transport is the plain change of
/// variables above, which is what makes the identity-rescaling case
/// bitwise exact.  Dispatches on the regime: the PV evaluator for a > 0,
/// the Riesz integral for a < 0.
double rescale_interval(const AlphaParam& alpha, double a, double b,
                        const std::function<double(double)>& h, double u,
                        const PvQuadratureConfig& cfg = {});

}  // namespace fraclap

#endif  // FRACLAP_OPERATORS_HPP_
