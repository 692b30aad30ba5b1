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

#ifndef FRACLAP_INTERNAL_KERNELS_HPP_
#define FRACLAP_INTERNAL_KERNELS_HPP_

#include "fraclap/kernels.hpp"

namespace fraclap::detail {

// Green kernel at (x, x+gap) or (x-gap, x) with the diagonal gap carried
// exactly.  Solver integrands substitute gap = s^{1/(2a)}; recovering the
// gap from the rounded second coordinate would quantize it to multiples
// of ulp(x) and turn the integrand into a staircase near the diagonal.
double green_gap(const KernelEvaluator& ev, double x, double gap, bool right);

}  // namespace fraclap::detail

#endif  // FRACLAP_INTERNAL_KERNELS_HPP_
