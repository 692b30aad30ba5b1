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
//
// Test-only reference implementations, deliberately independent of the
// library's production paths: dense LU solves on the materialized matrix,
// the O(n^2) Toeplitz product, and brute-force composite Simpson.

#ifndef FRACLAP_TESTS_ORACLES_HPP_
#define FRACLAP_TESTS_ORACLES_HPP_

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "fraclap/toeplitz.hpp"

namespace oracles {

// Dense row-major matrix from a first column.
inline std::vector<double> materialize(const fraclap::SymToeplitz& t) {
  const std::size_t m = t.order + 1;
  std::vector<double> a(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      a[i * m + j] = t.first_col[i > j ? i - j : j - i];
    }
  }
  return a;
}

// Solves A x = b by Gaussian elimination with partial pivoting (in-place
// copy); quadratic-cubic and simple on purpose.
inline std::vector<double> dense_solve(std::vector<double> a,
                                       std::vector<double> b) {
  const std::size_t m = b.size();
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < m; ++r) {
      if (std::abs(a[r * m + col]) > std::abs(a[piv * m + col])) piv = r;
    }
    if (a[piv * m + col] == 0.0) throw std::runtime_error("singular matrix");
    if (piv != col) {
      for (std::size_t c = 0; c < m; ++c) std::swap(a[piv * m + c], a[col * m + c]);
      std::swap(b[piv], b[col]);
    }
    for (std::size_t r = col + 1; r < m; ++r) {
      const double f = a[r * m + col] / a[col * m + col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c < m; ++c) a[r * m + c] -= f * a[col * m + c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(m);
  for (std::size_t ri = m; ri-- > 0;) {
    double acc = b[ri];
    for (std::size_t c = ri + 1; c < m; ++c) acc -= a[ri * m + c] * x[c];
    x[ri] = acc / a[ri * m + ri];
  }
  return x;
}

// Column k of the dense inverse.
inline std::vector<double> dense_inverse_column(const fraclap::SymToeplitz& t,
                                                std::size_t k) {
  std::vector<double> e(t.order + 1, 0.0);
  e[k] = 1.0;
  return dense_solve(materialize(t), std::move(e));
}

// Direct O(n^2) Toeplitz product.
inline std::vector<double> direct_matvec(const fraclap::SymToeplitz& t,
                                         const std::vector<double>& v) {
  const std::size_t m = t.order + 1;
  std::vector<double> out(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      acc += t.first_col[i > j ? i - j : j - i] * v[j];
    }
    out[i] = acc;
  }
  return out;
}

// Composite Simpson with `panels` even subdivisions.
inline double simpson(const std::function<double(double)>& f, double a,
                      double b, std::size_t panels) {
  if (panels % 2 != 0) ++panels;
  const double h = (b - a) / static_cast<double>(panels);
  double acc = f(a) + f(b);
  for (std::size_t i = 1; i < panels; ++i) {
    acc += f(a + h * static_cast<double>(i)) * (i % 2 ? 4.0 : 2.0);
  }
  return acc * h / 3.0;
}

inline std::vector<double> linspace(double a, double b, std::size_t count) {
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = count == 1 ? a
                        : a + (b - a) * static_cast<double>(i) /
                              static_cast<double>(count - 1);
  }
  return out;
}

}  // namespace oracles

#endif  // FRACLAP_TESTS_ORACLES_HPP_
