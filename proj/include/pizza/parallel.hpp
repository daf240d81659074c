#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace pizza {

/// 0 means auto: PIZZA_THREADS when set, otherwise the hardware concurrency.
int resolve_threads(int requested);

/// Free memory in bytes: unused physical memory, further limited by the
/// cgroup allowance when one is set.
std::size_t available_memory_bytes();

/// Runs body(task, worker) for task in [0, count) on `threads` workers that
/// pull task indices from a shared counter. The first exception thrown by any
/// task is rethrown on the calling thread after all workers stop.
template <class Body>
void parallel_tasks(std::size_t count, int threads, Body&& body) {
  const std::size_t workers =
      std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, resolve_threads(threads))));
  if (workers <= 1) {
    for (std::size_t t = 0; t < count; ++t) body(t, std::size_t{0});
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        while (!failed.load(std::memory_order_relaxed)) {
          const std::size_t t = next.fetch_add(1);
          if (t >= count) break;
          try {
            body(t, w);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            failed = true;
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace pizza
