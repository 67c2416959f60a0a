// Copyright 2026 The bondperc Authors
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

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace bondperc::detail {

/// Runs task(worker, index) for every index in [0, count) on `workers`
/// threads (the calling thread included). Indices are claimed dynamically.
/// The first exception thrown by any task is rethrown after all threads join.
template <typename Task>
void parallel_for(std::size_t count, unsigned workers, Task&& task) {
  const unsigned n_threads =
      static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(workers, count)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto body = [&](unsigned worker) {
    try {
      for (std::size_t i = next++; i < count; i = next++) task(worker, i);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = count;
    }
  };

  std::vector<std::thread> threads;
  threads.reserve(n_threads - 1);
  for (unsigned w = 1; w < n_threads; ++w) threads.emplace_back(body, w);
  body(0);
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace bondperc::detail
