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

#ifndef FRACLAP_TOEPLITZ_HPP_
#define FRACLAP_TOEPLITZ_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "fraclap/alpha.hpp"

namespace fraclap {

/// Symmetric real Toeplitz matrix of order n+1, stored as its first
/// column; entry (i,j) = first_col[|i-j|].  Positive definite whenever the
/// first column comes from the symbol |1 - e^{i t}|^{2a}.
struct SymToeplitz {
  AlphaParam alpha;
  std::size_t order;  // matrix is (order+1) x (order+1)
  std::vector<double> first_col;

  double entry(std::size_t i, std::size_t j) const;
};

/// Fills the first column with the symbol coefficients c[0..n].
SymToeplitz build_toeplitz(const AlphaParam& alpha, std::size_t n);

/// Matrix-vector product through circulant embedding and an FFT
/// convolution, O(n log n).
std::vector<double> matvec(const SymToeplitz& t, std::span<const double> v);

/// Solves T x = rhs by the Levinson recursion: O(n^2) time, O(n) extra
/// space.  Throws ConvergenceError if a reflection coefficient reaches
/// modulus >= 1 (loss of positive definiteness at working precision).
std::vector<double> levinson_solve(const SymToeplitz& t,
                                   std::span<const double> rhs);

/// Normalized first column of the inverse:
///   gamma[u] = (T^{-1})_{u,0} / sqrt((T^{-1})_{0,0}),
/// the coefficient sequence whose squared reciprocal modulus on the unit
/// circle reproduces the symbol's Fourier coefficients up to order
/// `degree`.  norm_head = (T^{-1})_{0,0} = 1 / (final prediction-error
/// variance), so the conditioning of T is readable off this struct.
struct PredictorPolynomial {
  std::size_t degree;
  std::vector<double> gamma;
  double norm_head;
};

PredictorPolynomial predictor(const SymToeplitz& t);

/// Arbitrary inverse entry from the predictor coefficients by the
/// Gohberg-Semencul two-convolution form, O(min(k,l)) per entry.
double inverse_entry(const PredictorPolynomial& p, std::size_t k,
                     std::size_t l);

/// Grid index [n x] = floor(n x), with floor-of-rounded when n x sits
/// within 1e-12 of an integer (avoids platform-dependent floor jitter).
std::size_t floor_index(std::size_t n, double x);

/// One scaled inverse-entry probe at the grid images of (x, y).
///   raw          = (T_n^{-1})_{[nx],[ny]}
///   scaled_green = raw * n^{1-2a}          (compare to G_a)
///   riesz_split  = (phihat_{-a}([nx]-[ny]) - raw) * n^{1-2a}
///                                           (compare to K_a)
/// x_snap, y_snap are the grid points actually probed.
struct InverseProbe {
  double raw;
  double scaled_green;
  double riesz_split;
  double x_snap;
  double y_snap;
};

InverseProbe scaled_inverse_probe(const AlphaParam& alpha, std::size_t n,
                                  double x, double y);

}  // namespace fraclap

#endif  // FRACLAP_TOEPLITZ_HPP_
