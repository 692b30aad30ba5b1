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

#include "fraclap/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "fraclap/errors.hpp"

namespace fraclap {

namespace {

// 16-point Gauss-Legendre rule on [-1,1], symmetric node pairs.
constexpr double kNodes[8] = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
    0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
    0.9445750230732326, 0.9894009349916499};
constexpr double kWeights[8] = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
    0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
    0.0622535239386479, 0.0271524594117541};

double gl16(const std::function<double(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double acc = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double dx = half * kNodes[i];
    acc += kWeights[i] * (f(mid - dx) + f(mid + dx));
  }
  return half * acc;
}

struct Panel {
  double lo, hi, estimate;
};

}  // namespace

double adaptive_integrate(const std::function<double(double)>& f, double lo,
                          double hi, const QuadratureOptions& opt,
                          std::span<const double> breakpoints) {
  if (!(hi > lo)) return 0.0;
  const double span = hi - lo;

  std::vector<double> edges;
  edges.reserve(breakpoints.size() + 2);
  edges.push_back(lo);
  for (double p : breakpoints) {
    if (p > lo && p < hi) edges.push_back(p);
  }
  edges.push_back(hi);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::vector<Panel> stack;
  stack.reserve(64);
  double initial_mag = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double est = gl16(f, edges[i], edges[i + 1]);
    stack.push_back({edges[i], edges[i + 1], est});
    initial_mag += std::abs(est);
  }

  double total = 0.0;
  int panels = static_cast<int>(stack.size());
  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();
    const double mid = 0.5 * (p.lo + p.hi);
    const double left = gl16(f, p.lo, mid);
    const double right = gl16(f, mid, p.hi);
    const double refined = left + right;
    const double err = std::abs(refined - p.estimate);
    const double width_frac = (p.hi - p.lo) / span;
    const double budget =
        std::max({opt.tol_abs * width_frac,
                  opt.tol_rel * initial_mag * width_frac,
                  opt.panel_rel_floor * std::abs(refined),
                  1e-15 * initial_mag});
    if (err <= budget || (p.hi - p.lo) < 4e-16 * span) {
      total += refined;
    } else {
      panels += 2;
      if (panels > opt.max_panels) {
        throw ConvergenceError(
            "adaptive_integrate: panel budget exhausted (max_panels=" +
            std::to_string(opt.max_panels) + ")");
      }
      stack.push_back({p.lo, mid, left});
      stack.push_back({mid, p.hi, right});
    }
  }
  return total;
}

}  // namespace fraclap
