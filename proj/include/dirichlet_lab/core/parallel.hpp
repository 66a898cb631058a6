#pragma once

// Index-parallel loops whose results land in caller-owned slots, so output
// never depends on scheduling. DIRICHLET_LAB_THREADS caps the thread count.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace dirichlet_lab {

inline unsigned thread_count(unsigned requested = 0) {
  unsigned n = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  if (const char* cap = std::getenv("DIRICHLET_LAB_THREADS")) {
    long c = std::strtol(cap, nullptr, 10);
    if (c >= 1) n = std::min(n, static_cast<unsigned>(c));
  }
  return std::max(1u, n);
}

// Calls fn(i) for i in [0, n). Work is handed out dynamically; the first
// exception (lowest index) is rethrown after all workers stop.
template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn fn) {
  threads = std::min<std::size_t>(threads == 0 ? 1 : threads, n == 0 ? 1 : n);
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex mutex;
  std::size_t failed_at = n;
  std::exception_ptr error;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(mutex);
        if (i < failed_at) {
          failed_at = i;
          error = std::current_exception();
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace dirichlet_lab
