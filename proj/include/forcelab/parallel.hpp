// Copyright 2026 The forcelab Authors
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

#ifndef FORCELAB_PARALLEL_HPP_
#define FORCELAB_PARALLEL_HPP_

#include <cstddef>
#include <exception>
#include <mutex>

#include <omp.h>

namespace forcelab {

// Worker count for OpenMP regions; 0 means the runtime default.
inline int resolve_workers(int workers) {
  return workers > 0 ? workers : omp_get_max_threads();
}

// Runs body(i) for every i in [0, count) with dynamic scheduling. Each index
// must write only to its own output slot. The exception thrown by the lowest
// failing index is rethrown after the region, so failures are deterministic.
template <class Body>
void parallel_for(std::size_t count, int workers, Body&& body) {
  std::exception_ptr error;
  std::size_t error_index = count;
  std::mutex error_mutex;
  const long long n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve_workers(workers))
  for (long long i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (static_cast<std::size_t>(i) < error_index) {
        error_index = static_cast<std::size_t>(i);
        error = std::current_exception();
      }
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace forcelab

#endif  // FORCELAB_PARALLEL_HPP_
