#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace summa {

/// Worker count used by parallel_for; defaults to 1.
std::size_t thread_count() noexcept;
void set_thread_count(std::size_t n) noexcept;

namespace detail {
// Set inside workers so nested parallel_for calls run inline.
inline thread_local bool in_worker = false;
}  // namespace detail

/// Calls body(i) for every i in [0, n) on up to thread_count() workers.
/// Work is split into contiguous static chunks; callers write results by index,
/// so the outcome never depends on the worker count.
template <typename Body>
void parallel_for(std::size_t n, Body&& body) {
  const std::size_t workers = std::min(thread_count(), n);
  if (workers <= 1 || detail::in_worker) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = n * w / workers;
    const std::size_t end = n * (w + 1) / workers;
    pool.emplace_back([&, begin, end] {
      detail::in_worker = true;
      try {
        for (std::size_t i = begin; i < end; ++i) body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace summa
