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

#ifndef FRACLAP_FRACLAP_HPP_
#define FRACLAP_FRACLAP_HPP_

#include "fraclap/alpha.hpp"
#include "fraclap/errors.hpp"
#include "fraclap/grid_function.hpp"
#include "fraclap/kernels.hpp"
#include "fraclap/operators.hpp"
#include "fraclap/parallel.hpp"
#include "fraclap/quadrature.hpp"
#include "fraclap/serialize.hpp"
#include "fraclap/solver.hpp"
#include "fraclap/special.hpp"
#include "fraclap/symbol.hpp"
#include "fraclap/toeplitz.hpp"

#define FRACLAP_VERSION "0.1.0"

#endif  // FRACLAP_FRACLAP_HPP_
