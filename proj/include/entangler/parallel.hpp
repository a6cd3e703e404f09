#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace entangler::parallel {

/// Worker-count resolution order: explicit request, ENTANGLER_THREADS,
/// hardware concurrency.
inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("ENTANGLER_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Runs body(i) for i in [0, count) on up to `threads` workers. Work is
/// distributed by index so each i is computed exactly once; callers index
/// their outputs by i, which keeps results identical for every worker count.
/// Exceptions from workers are rethrown on the calling thread.
inline void parallel_for(int count, int threads,
                         const std::function<void(int)>& body) {
  threads = std::min(resolve_threads(threads), count);
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  pool.reserve(threads);
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int i = w; i < count; i += threads) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace entangler::parallel
