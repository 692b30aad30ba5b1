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

#ifndef FRACLAP_ERRORS_HPP_
#define FRACLAP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace fraclap {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid argument or precondition violation (bad alpha, index out of
/// range, dimension mismatch, point outside the admissible domain).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Numerical failure: adaptive quadrature exhausted its panel budget, or a
/// Levinson reflection coefficient reached modulus >= 1.
class ConvergenceError : public Error {
 public:
  explicit ConvergenceError(const std::string& msg) : Error(msg) {}
};

}  // namespace fraclap

#endif  // FRACLAP_ERRORS_HPP_
