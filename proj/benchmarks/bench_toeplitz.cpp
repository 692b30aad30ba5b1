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

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "fraclap/fraclap.hpp"

namespace {

std::vector<double> random_vector(std::size_t n) {
  std::mt19937_64 rng(123);
  std::normal_distribution<double> dist;
  std::vector<double> v(n);
  for (double& x : v) x = dist(rng);
  return v;
}

void bm_levinson_solve(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const auto t = fraclap::build_toeplitz(fraclap::AlphaParam(0.25), n);
  const auto rhs = random_vector(n + 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fraclap::levinson_solve(t, rhs));
  }
  state.SetComplexityN(state.range(0));
}

void bm_matvec_fft(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const auto t = fraclap::build_toeplitz(fraclap::AlphaParam(0.25), n);
  const auto v = random_vector(n + 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fraclap::matvec(t, v));
  }
  state.SetComplexityN(state.range(0));
}

void bm_predictor(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const auto t = fraclap::build_toeplitz(fraclap::AlphaParam(0.25), n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fraclap::predictor(t));
  }
  state.SetComplexityN(state.range(0));
}

void bm_inverse_entry(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const auto p =
      fraclap::predictor(fraclap::build_toeplitz(fraclap::AlphaParam(0.25), n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fraclap::inverse_entry(p, n / 3, 2 * n / 3));
  }
}

void bm_phi_hat(benchmark::State& state) {
  const fraclap::AlphaParam a(0.25);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fraclap::phi_hat(a, n));
  }
}

}  // namespace

BENCHMARK(bm_levinson_solve)->RangeMultiplier(4)->Range(256, 4096)->Complexity();
BENCHMARK(bm_matvec_fft)->RangeMultiplier(4)->Range(256, 4096)->Complexity();
BENCHMARK(bm_predictor)->RangeMultiplier(4)->Range(256, 4096)->Complexity();
BENCHMARK(bm_inverse_entry)->RangeMultiplier(4)->Range(256, 4096);
BENCHMARK(bm_phi_hat)->RangeMultiplier(8)->Range(512, 32768);

BENCHMARK_MAIN();
