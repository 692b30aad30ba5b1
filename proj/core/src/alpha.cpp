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

#include "fraclap/alpha.hpp"

#include <cmath>
#include <string>

#include "fraclap/errors.hpp"

namespace fraclap {

namespace {

Regime regime_of(double a) {
  if (a < 0.0) return Regime::Negative;
  if (a < 0.5) return Regime::SubHalf;
  return Regime::SuperHalf;
}

}  // namespace

AlphaParam::AlphaParam(double value) : AlphaParam(value, regime_of(value), false) {
  if (!std::isfinite(value) || value <= -0.5 || value >= 1.0 || value == 0.0 ||
      value == 0.5) {
    throw DomainError("alpha must lie in (-1/2,0) u (0,1/2) u (1/2,1), got " +
                      std::to_string(value));
  }
}

AlphaParam AlphaParam::unchecked(double value) {
  return AlphaParam(value, regime_of(value), true);
}

namespace detail {

void require_subhalf(const AlphaParam& alpha, const char* where) {
  if (alpha.is_unchecked()) return;
  if (alpha.regime() != Regime::SubHalf) {
    throw DomainError(std::string(where) +
                      ": requires alpha in (0,1/2), got " +
                      std::to_string(alpha.value()));
  }
}

void require_positive_regime(const AlphaParam& alpha, const char* where) {
  if (alpha.is_unchecked()) return;
  if (alpha.regime() == Regime::Negative) {
    throw DomainError(std::string(where) + ": requires alpha > 0, got " +
                      std::to_string(alpha.value()));
  }
}

void require_negative(const AlphaParam& alpha, const char* where) {
  if (alpha.is_unchecked()) return;
  if (alpha.regime() != Regime::Negative) {
    throw DomainError(std::string(where) +
                      ": requires alpha in (-1/2,0), got " +
                      std::to_string(alpha.value()));
  }
}

}  // namespace detail

}  // namespace fraclap
