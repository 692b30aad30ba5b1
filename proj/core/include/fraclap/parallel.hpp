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

#ifndef FRACLAP_PARALLEL_HPP_
#define FRACLAP_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace fraclap {

/// Caps the worker-thread count used by parallel_for; 0 restores the
/// hardware default.  The CLI wires FRACLAP_THREADS to this.
void set_max_threads(unsigned n);
unsigned max_threads();

/// Runs body(i) for i in [0, count) across worker threads (static block
/// partition).  Results written to disjoint slots are deterministic
/// regardless of the thread count.  The first exception thrown by a body
/// is rethrown on the calling thread.
void parallel_for(std::size_t count,
                  const std::function<void(std::size_t)>& body);

}  // namespace fraclap

#endif  // FRACLAP_PARALLEL_HPP_
