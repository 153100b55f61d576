// Copyright 2026 The fivew Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FIVEW_PARALLEL_HPP
#define FIVEW_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace fivew {

struct ExecOptions {
  // 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
  // Allow exhaustive sweeps above max_exhaustive_n.
  bool force = false;
  unsigned max_exhaustive_n = 11;
};

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) {
    return requested;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs body(local, i) for i in [0, count) on a pool of workers, each with a
// private Local, then folds the locals together with merge(into, from).
// The fold order is fixed, so commutative merges are deterministic.
template <typename Local, typename Body, typename Merge>
Local parallel_reduce(std::uint64_t count, unsigned threads, Body body, Merge merge,
                      const Local& init = Local{}) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(threads), std::max<std::uint64_t>(count, 1)));
  std::vector<Local> locals(workers, init);
  if (workers == 1) {
    for (std::uint64_t i = 0; i < count; ++i) {
      body(locals[0], i);
    }
    return std::move(locals[0]);
  }

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const std::uint64_t chunk = std::max<std::uint64_t>(1, count / (workers * 16ULL));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (;;) {
          const std::uint64_t begin = next.fetch_add(chunk);
          if (begin >= count) {
            break;
          }
          const std::uint64_t end = std::min(count, begin + chunk);
          for (std::uint64_t i = begin; i < end; ++i) {
            body(locals[w], i);
          }
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) {
          failure = std::current_exception();
        }
        next.store(count);
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
  for (unsigned w = 1; w < workers; ++w) {
    merge(locals[0], locals[w]);
  }
  return std::move(locals[0]);
}

}  // namespace fivew

#endif  // FIVEW_PARALLEL_HPP
