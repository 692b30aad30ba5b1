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

#include <benchmark/benchmark.h>

#include "fraclap/fraclap.hpp"

namespace {

void bm_green_G(benchmark::State& state) {
  const fraclap::KernelEvaluator ev(fraclap::AlphaParam(0.25));
  // Distance to the diagonal controls how hard the inner knee is.
  const double d = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fraclap::green_G(ev, 0.4, 0.4 + d));
  }
}

void bm_kernel_K(benchmark::State& state) {
  const fraclap::KernelEvaluator ev(fraclap::AlphaParam(0.25));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fraclap::kernel_K(ev, 0.4, 0.6));
  }
}

void bm_reference_pv_bump(benchmark::State& state) {
  const auto f = fraclap::TestFunctionSpec::smooth_bump(0.3, 0.7);
  const fraclap::AlphaParam a(0.25);
  const fraclap::PvQuadratureConfig cfg;
  const auto kinks = f.kinks();
  for (auto _ : state) {
    benchmark::DoNotOptimize(fraclap::reference_pv(
        a, [&](double x) { return f(x); }, 0.5, cfg, kinks));
  }
}

void bm_solve_green_point(benchmark::State& state) {
  const fraclap::AlphaParam a(0.25);
  const auto f = fraclap::TestFunctionSpec::hat(0.3, 0.7);
  const std::vector<double> grid = {0.5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(fraclap::solve_green(a, f, grid));
  }
}

}  // namespace

BENCHMARK(bm_green_G)->Arg(10)->Arg(1000)->Arg(100000);
BENCHMARK(bm_kernel_K);
BENCHMARK(bm_reference_pv_bump);
BENCHMARK(bm_solve_green_point);

BENCHMARK_MAIN();
