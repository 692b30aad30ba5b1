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

#ifndef FRACLAP_GRID_FUNCTION_HPP_
#define FRACLAP_GRID_FUNCTION_HPP_

#include <cstddef>
#include <functional>
#include <vector>

namespace fraclap {

/// Samples of a function on the uniform grid {k/n : 0 <= k <= n} of [0,1].
class GridFunction {
 public:
  /// Wraps existing samples; values.size() must be n+1.
  GridFunction(std::size_t n, std::vector<double> values);

  /// Samples a callable at the n+1 grid nodes and keeps the callable for
  /// off-grid evaluation.
  static GridFunction sample(const std::function<double(double)>& f,
                             std::size_t n);

  std::size_t order() const { return n_; }
  const std::vector<double>& values() const { return values_; }
  double at_node(std::size_t k) const;

  /// Piecewise-linear interpolant of the samples, extended by zero
  /// outside [0,1].
  double interp(double x) const;

  /// If constructed via sample(), evaluates the original callable;
  /// otherwise falls back to interp().
  double source(double x) const;
  bool has_source() const { return static_cast<bool>(source_); }

  /// Interior nodes 1/n .. (n-1)/n, the interpolant's kink locations;
  /// handy as quadrature breakpoints.
  std::vector<double> interior_knots() const;

  /// True when the samples vanish at both endpoints and outside some
  /// [a,b] with 0 < a <= b < 1 (compact support strictly inside (0,1)).
  bool has_compact_support() const;

 private:
  std::size_t n_;
  std::vector<double> values_;
  std::function<double(double)> source_;
};

}  // namespace fraclap

#endif  // FRACLAP_GRID_FUNCTION_HPP_
