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

#ifndef FRACLAP_SERIALIZE_HPP_
#define FRACLAP_SERIALIZE_HPP_

#include <string>

#include "fraclap/kernels.hpp"
#include "fraclap/solver.hpp"

namespace fraclap {

/// 17-significant-digit decimal form, '.' decimal point, locale-free;
/// round-trips 64-bit floats exactly.  NaN prints as "nan".
std::string format_double(double v);

/// SolveReport as a JSON object:
///   {"alpha":..., "n":..., "window":[...], "grid":[...],
///    "g_discrete":[...], "g_green":[...], "g_riesz":[...],
///    "pairwise_sup":{"dg":..., "dr":..., "gr":...}, "residual_sup":...}
std::string to_json(const SolveReport& report);
SolveReport solve_report_from_json(const std::string& text);

/// Solution dump, header `x,g_discrete,g_green,g_riesz`.
std::string to_csv(const SolveReport& report);

/// Kernel table, header `x,y,G,K,H`, one row per pair, `nan` for H on the
/// diagonal.
std::string to_csv(const KernelTable& table);
std::string to_json(const KernelTable& table);

}  // namespace fraclap

#endif  // FRACLAP_SERIALIZE_HPP_
