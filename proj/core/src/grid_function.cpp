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

#include "fraclap/grid_function.hpp"

#include <cmath>
#include <string>

#include "fraclap/errors.hpp"

namespace fraclap {

GridFunction::GridFunction(std::size_t n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  if (n_ < 1 || values_.size() != n_ + 1) {
    throw DomainError("GridFunction: need n+1 values, got " +
                      std::to_string(values_.size()) + " for n=" +
                      std::to_string(n_));
  }
}

GridFunction GridFunction::sample(const std::function<double(double)>& f,
                                  std::size_t n) {
  std::vector<double> v(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    v[k] = f(static_cast<double>(k) / static_cast<double>(n));
  }
  GridFunction g(n, std::move(v));
  g.source_ = f;
  return g;
}

double GridFunction::at_node(std::size_t k) const {
  if (k > n_) throw DomainError("GridFunction::at_node: index out of range");
  return values_[k];
}

double GridFunction::interp(double x) const {
  if (x <= 0.0 || x >= 1.0) {
    if (x == 0.0) return values_.front();
    if (x == 1.0) return values_.back();
    return 0.0;
  }
  const double pos = x * static_cast<double>(n_);
  std::size_t k = static_cast<std::size_t>(pos);
  if (k >= n_) k = n_ - 1;
  const double frac = pos - static_cast<double>(k);
  return values_[k] + frac * (values_[k + 1] - values_[k]);
}

double GridFunction::source(double x) const {
  if (source_) return source_(x);
  return interp(x);
}

bool GridFunction::has_compact_support() const {
  if (values_.front() != 0.0 || values_.back() != 0.0) return false;
  std::size_t first = n_ + 1, last = 0;
  for (std::size_t k = 0; k <= n_; ++k) {
    if (values_[k] != 0.0) {
      if (first > n_) first = k;
      last = k;
    }
  }
  if (first > n_) return true;  // identically zero
  return first > 0 && last < n_;
}

std::vector<double> GridFunction::interior_knots() const {
  std::vector<double> knots(n_ - 1);
  for (std::size_t k = 1; k < n_; ++k) {
    knots[k - 1] = static_cast<double>(k) / static_cast<double>(n_);
  }
  return knots;
}

}  // namespace fraclap
