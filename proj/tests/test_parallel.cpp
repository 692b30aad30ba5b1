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

#include <atomic>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "fraclap/parallel.hpp"

TEST_CASE("parallel_for visits every index exactly once") {
  std::vector<int> hits(1000, 0);
  fraclap::parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);
}

TEST_CASE("parallel_for respects the thread cap and restores it") {
  fraclap::set_max_threads(1);
  CHECK(fraclap::max_threads() == 1);
  std::atomic<int> count{0};
  fraclap::parallel_for(64, [&](std::size_t) { ++count; });
  CHECK(count == 64);
  fraclap::set_max_threads(0);
  CHECK(fraclap::max_threads() >= 1);
}

TEST_CASE("parallel_for surfaces the first worker exception") {
  CHECK_THROWS_AS(
      fraclap::parallel_for(128,
                            [](std::size_t i) {
                              if (i == 77) throw std::runtime_error("boom");
                            }),
      std::runtime_error);
}
