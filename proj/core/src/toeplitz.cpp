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

#include "fraclap/toeplitz.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "fraclap/errors.hpp"
#include "fraclap/symbol.hpp"
#include "internal_fft.hpp"

namespace fraclap {

double SymToeplitz::entry(std::size_t i, std::size_t j) const {
  if (i > order || j > order) {
    throw DomainError("SymToeplitz::entry: index out of range");
  }
  return first_col[i > j ? i - j : j - i];
}

SymToeplitz build_toeplitz(const AlphaParam& alpha, std::size_t n) {
  if (n < 1) throw DomainError("build_toeplitz: order must be >= 1");
  return SymToeplitz{alpha, n, phi_hat(alpha, n).c};
}

std::vector<double> matvec(const SymToeplitz& t, std::span<const double> v) {
  const std::size_t n = t.order;
  if (v.size() != n + 1) {
    throw DomainError("matvec: vector length " + std::to_string(v.size()) +
                      " does not match order " + std::to_string(n + 1));
  }
  // Embed the first column into a circulant of power-of-two size
  // M >= 2n+1 so the wrapped diagonals do not overlap.
  const std::size_t m = detail::next_pow2(2 * n + 1);
  std::vector<std::complex<double>> col(m), vec(m);
  col[0] = t.first_col[0];
  for (std::size_t j = 1; j <= n; ++j) {
    col[j] = t.first_col[j];
    col[m - j] = t.first_col[j];
  }
  for (std::size_t j = 0; j <= n; ++j) vec[j] = v[j];

  detail::fft_radix2(col, false);
  detail::fft_radix2(vec, false);
  for (std::size_t j = 0; j < m; ++j) col[j] *= vec[j];
  detail::fft_radix2(col, true);

  std::vector<double> out(n + 1);
  for (std::size_t j = 0; j <= n; ++j) out[j] = col[j].real();
  return out;
}

namespace {

// One Levinson step state: monic forward-prediction coefficients a[0..m]
// and the prediction-error variance E.  Positive definiteness shows up as
// every reflection coefficient having modulus < 1 and E staying positive.
void levinson_step(std::vector<double>& a, std::size_t m,
                   const std::vector<double>& c, double& error_variance) {
  double acc = 0.0;
  for (std::size_t j = 0; j < m; ++j) acc += a[j] * c[m - j];
  const double k = -acc / error_variance;
  if (!(std::abs(k) < 1.0)) {
    throw ConvergenceError(
        "levinson: reflection coefficient reached modulus >= 1 at step " +
        std::to_string(m) + " (matrix not positive definite at working "
        "precision)");
  }
  std::size_t lo = 0, hi = m;
  for (; lo < hi; ++lo, --hi) {
    const double alo = a[lo], ahi = a[hi];
    a[lo] = alo + k * ahi;
    a[hi] = ahi + k * alo;
  }
  if (lo == hi) a[lo] += k * a[lo];
  error_variance *= (1.0 - k * k);
  if (!(error_variance > 0.0)) {
    throw ConvergenceError("levinson: prediction-error variance underflowed");
  }
}

}  // namespace

std::vector<double> levinson_solve(const SymToeplitz& t,
                                   std::span<const double> rhs) {
  const std::size_t n = t.order;
  if (rhs.size() != n + 1) {
    throw DomainError("levinson_solve: rhs length mismatch");
  }
  const std::vector<double>& c = t.first_col;
  if (!(c[0] > 0.0)) {
    throw ConvergenceError("levinson_solve: diagonal entry not positive");
  }

  std::vector<double> a(n + 1, 0.0), x(n + 1, 0.0);
  a[0] = 1.0;
  double e = c[0];
  x[0] = rhs[0] / c[0];
  for (std::size_t m = 1; m <= n; ++m) {
    levinson_step(a, m, c, e);
    double s = 0.0;
    for (std::size_t j = 0; j < m; ++j) s += c[m - j] * x[j];
    const double mu = (rhs[m] - s) / e;
    for (std::size_t j = 0; j <= m; ++j) x[j] += mu * a[m - j];
  }
  return x;
}

PredictorPolynomial predictor(const SymToeplitz& t) {
  const std::size_t n = t.order;
  const std::vector<double>& c = t.first_col;
  if (!(c[0] > 0.0)) {
    throw ConvergenceError("predictor: diagonal entry not positive");
  }
  std::vector<double> a(n + 1, 0.0);
  a[0] = 1.0;
  double e = c[0];
  for (std::size_t m = 1; m <= n; ++m) levinson_step(a, m, c, e);
  // First column of the inverse is a/e; normalizing by
  // sqrt((T^{-1})_{0,0}) = sqrt(1/e) leaves a/sqrt(e).
  const double inv_sqrt_e = 1.0 / std::sqrt(e);
  for (double& v : a) v *= inv_sqrt_e;
  return PredictorPolynomial{n, std::move(a), 1.0 / e};
}

double inverse_entry(const PredictorPolynomial& p, std::size_t k,
                     std::size_t l) {
  const std::size_t n = p.degree;
  if (k > n || l > n) {
    throw DomainError("inverse_entry: index out of range");
  }
  if (k > l) std::swap(k, l);
  const std::vector<double>& g = p.gamma;
  // Two triangular convolutions; all coefficients are real so the
  // conjugates drop.  The second sum runs over the polynomial's top
  // coefficients; its u-th term pairs g[N-l+u+1] with g[N-k+u+1], which is
  // empty for k = 0 (the first row needs no wrap correction).
  double head = 0.0;
  for (std::size_t u = 0; u <= k; ++u) head += g[k - u] * g[l - u];
  double wrap = 0.0;
  for (std::size_t u = 0; u < k; ++u) {
    wrap += g[u + 1 + n - l] * g[u + 1 + n - k];
  }
  return head - wrap;
}

std::size_t floor_index(std::size_t n, double x) {
  const double v = static_cast<double>(n) * x;
  const double r = std::nearbyint(v);
  const double k = (std::abs(v - r) < 1e-12) ? r : std::floor(v);
  if (k <= 0.0) return 0;
  if (k >= static_cast<double>(n)) return n;
  return static_cast<std::size_t>(k);
}

InverseProbe scaled_inverse_probe(const AlphaParam& alpha, std::size_t n,
                                  double x, double y) {
  detail::require_subhalf(alpha, "scaled_inverse_probe");
  if (!(x > 0.0 && x < 1.0 && y > 0.0 && y < 1.0)) {
    throw DomainError("scaled_inverse_probe: x, y must lie in (0,1)");
  }
  if (x == y) {
    throw DomainError("scaled_inverse_probe: x == y is excluded");
  }
  const std::size_t k = floor_index(n, x);
  const std::size_t l = floor_index(n, y);
  if (k == l) {
    throw DomainError(
        "scaled_inverse_probe: x and y collapse to one grid index at n=" +
        std::to_string(n));
  }
  const SymToeplitz t = build_toeplitz(alpha, n);
  const PredictorPolynomial p = predictor(t);
  const double raw = inverse_entry(p, k, l);

  const double a = alpha.value();
  const double scale = std::pow(static_cast<double>(n), 1.0 - 2.0 * a);
  const std::size_t lag = k > l ? k - l : l - k;
  const SymbolCoefficients neg = phi_hat(AlphaParam::unchecked(-a), lag);
  const double dn = static_cast<double>(n);
  return InverseProbe{raw, raw * scale, (neg.c[lag] - raw) * scale,
                      static_cast<double>(k) / dn,
                      static_cast<double>(l) / dn};
}

}  // namespace fraclap
