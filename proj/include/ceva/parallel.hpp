#pragma once

// Deterministic task-parallel helpers.  Work items are claimed dynamically but
// every result is stored by item index, so output never depends on the worker
// count or scheduling order.  The worker count comes from the CEVA_WORKERS
// environment variable when set (minimum 1), else std::thread::hardware_concurrency.

#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace ceva {

inline unsigned worker_count() {
  if (const char* env = std::getenv("CEVA_WORKERS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Runs fn(i) for i in [0, n).  The first exception (by item index) is rethrown.
template <class Fn>
void parallel_for(size_t n, Fn&& fn) {
  const unsigned workers = std::min<size_t>(worker_count(), n ? n : 1);
  if (workers <= 1 || n <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::exception_ptr> errors(n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (size_t i = 0; i < n; ++i)
    if (errors[i]) std::rethrow_exception(errors[i]);
}

// Deterministic map: out[i] = fn(i) regardless of scheduling.
template <class T, class Fn>
std::vector<T> parallel_map(size_t n, Fn&& fn) {
  std::vector<T> out(n);
  parallel_for(n, [&](size_t i) { out[i] = fn(i); });
  return out;
}

}  // namespace ceva
