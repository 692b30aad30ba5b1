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

#ifndef FRACLAP_KERNELS_HPP_
#define FRACLAP_KERNELS_HPP_

#include <vector>

#include "fraclap/alpha.hpp"

namespace fraclap {

/// Quadrature configuration for the kernel integrals (sub-half regime).
class KernelEvaluator {
 public:
  explicit KernelEvaluator(AlphaParam alpha, double tol = 1e-7,
                           int max_panels = 4096);

  const AlphaParam& alpha() const { return alpha_; }
  double tol() const { return tol_; }
  int max_panels() const { return max_panels_; }

 private:
  AlphaParam alpha_;
  double tol_;
  int max_panels_;
};

/// Green kernel
///   G_a(x,y) = x^a y^a / Gamma(a)^2
///              * int_{max(x,y)}^{1} (t-x)^{a-1} (t-y)^{a-1} t^{-2a} dt,
/// with G(0,0) = 0 and G = 0 when max(x,y) >= 1 or min(x,y) <= 0.  The
/// endpoint factor (t-max)^{a-1} is absorbed exactly by the substitution
/// t = max + s^{1/a}; the remaining near-singular factor is kept in the
/// cancellation-free form (|x-y| + s^{1/a})^{a-1} and its knee at
/// s = |x-y|^a is seeded as a panel edge.  Diverges on the interior
/// diagonal, which is therefore rejected.
double green_G(const KernelEvaluator& ev, double x, double y);

/// Correction kernel
///   K_a(u,y) = u^a y^a / Gamma(a)^2
///              * ( int_1^inf (t-u)^{a-1} (t-y)^{a-1} t^{-2a} dt
///                + int_0^inf (t+u)^{a-1} (t+y)^{a-1} t^{-2a} dt ),
/// for (u,y) in (0,1)^2.  Tails map to [0,1) via t = 1/(1-s) (the
/// transformed integrands tend to 1); the t^{-2a} endpoint of the second
/// integral is removed by s = t^{1-2a}/(1-2a).
double kernel_K(const KernelEvaluator& ev, double u, double y);

/// Riesz-minus-correction kernel
///   H_a(x,y) = C_{-a} |x-y|^{2a-1} - K_a(x,y),  x != y.
/// Coincides with G_a on (0,1)^2; the numerical gap between the two is a
/// cross-validation of both quadrature routes.
double kernel_H(const KernelEvaluator& ev, double x, double y);

/// Kernel values over a grid pair.  G and K are symmetric; when xs == ys
/// only the upper triangle is computed and mirrored.  H is NaN on the
/// diagonal (never extrapolated).
struct KernelTable {
  double alpha;
  std::vector<double> xs;
  std::vector<double> ys;
  // Row-major, value(i,j) at index i*ys.size()+j.
  std::vector<double> G;
  std::vector<double> K;
  std::vector<double> H;

  std::size_t index(std::size_t i, std::size_t j) const {
    return i * ys.size() + j;
  }
};

/// Fills a KernelTable; entries are evaluated in parallel.  Grids must be
/// strictly increasing and strictly inside (0,1).
KernelTable tabulate(const KernelEvaluator& ev, std::vector<double> xs,
                     std::vector<double> ys);

}  // namespace fraclap

#endif  // FRACLAP_KERNELS_HPP_
