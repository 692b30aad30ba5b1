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

#ifndef FRACLAP_ALPHA_HPP_
#define FRACLAP_ALPHA_HPP_

namespace fraclap {

/// The three admissible ranges of the fractional order.
enum class Regime {
  Negative,   // -1/2 < alpha < 0
  SubHalf,    //    0 < alpha < 1/2
  SuperHalf,  //  1/2 < alpha < 1
};

/// Validated fractional order.  Construction rejects alpha outside
/// (-1/2,0) u (0,1/2) u (1/2,1); in particular 0 and 1/2 are excluded.
class AlphaParam {
 public:
  /// Validating constructor; throws DomainError for inadmissible values.
  explicit AlphaParam(double value);

  /// Bypasses domain validation.  Exists so that the classical order
  /// alpha=1 (second difference / Dirichlet Laplacian) can be pushed
  /// through the same code paths as an exactly-known cross-check.
  /// Regime-based preconditions treat such values as caller-asserted.
  static AlphaParam unchecked(double value);

  double value() const { return value_; }
  Regime regime() const { return regime_; }
  bool is_unchecked() const { return unchecked_; }

 private:
  AlphaParam(double value, Regime regime, bool unchecked)
      : value_(value), regime_(regime), unchecked_(unchecked) {}

  double value_;
  Regime regime_;
  bool unchecked_;
};

namespace detail {
// Precondition helpers: pass for the stated regime, or for any
// unchecked (caller-asserted) parameter.
void require_subhalf(const AlphaParam& alpha, const char* where);
void require_positive_regime(const AlphaParam& alpha, const char* where);
void require_negative(const AlphaParam& alpha, const char* where);
}  // namespace detail

}  // namespace fraclap

#endif  // FRACLAP_ALPHA_HPP_
