#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace strongdom {

/// Thread count for sweep drivers: $STRONGDOM_THREADS when set, otherwise
/// hardware concurrency (at least 1).
unsigned default_thread_count();

/// Applies fn(i) for i in [0, count) on a worker pool and returns the
/// results in index order, independent of completion order. The first
/// exception thrown by any worker is rethrown after all workers join.
template <typename Result, typename Fn>
std::vector<Result> parallel_map(std::size_t count, unsigned threads, Fn&& fn) {
  std::vector<Result> results(count);
  if (count == 0) return results;
  if (threads <= 1 || count == 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count || failed.load()) return;
      try {
        results[i] = fn(i);
      } catch (...) {
        if (!failed.exchange(true)) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  unsigned spawn = threads < count ? threads : static_cast<unsigned>(count);
  pool.reserve(spawn);
  for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
  return results;
}

}  // namespace strongdom
