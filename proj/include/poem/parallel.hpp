//
// PoemKit - Copyright 2026 PoemKit Developers.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace poem {

// 0 or negative requests resolve to the hardware thread count.
inline int resolve_thread_count(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(begin, end) over a static block partition of [0, n). Callers must
// write results only to slots owned by their indices, which keeps output
// independent of the thread count. The lowest-index exception wins.
inline void parallel_for_blocks(
    std::size_t n, int threads,
    const std::function<void(std::size_t, std::size_t)>& fn) {
  const int t = resolve_thread_count(threads);
  if (t <= 1 || n <= 1) {
    if (n > 0) fn(0, n);
    return;
  }
  const std::size_t n_workers = std::min<std::size_t>(static_cast<std::size_t>(t), n);
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(n_workers);
  pool.reserve(n_workers);
  for (std::size_t w = 0; w < n_workers; ++w) {
    const std::size_t begin = n * w / n_workers;
    const std::size_t end = n * (w + 1) / n_workers;
    pool.emplace_back([&, w, begin, end] {
      try {
        fn(begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
}

// Per-index convenience wrapper.
inline void parallel_for(std::size_t n, int threads,
                         const std::function<void(std::size_t)>& fn) {
  parallel_for_blocks(n, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) fn(i);
  });
}

}  // namespace poem
