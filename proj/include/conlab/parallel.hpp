// parallel.hpp -- deterministic index-space parallel loop.
#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace conlab {

namespace detail {
inline thread_local int parallel_depth = 0;
}

/// Runs fn(i) for i in [0, n). Work is split by contiguous index blocks so
/// writers that store results by index produce identical output for any
/// thread count. Nested calls degrade to serial execution.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  unsigned workers = std::thread::hardware_concurrency();
  if (workers <= 1 || n < 2 || detail::parallel_depth > 0) {
    detail::parallel_depth++;
    try {
      for (std::size_t i = 0; i < n; ++i) fn(i);
    } catch (...) {
      detail::parallel_depth--;
      throw;
    }
    detail::parallel_depth--;
    return;
  }
  if (workers > n) workers = (unsigned)n;
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      detail::parallel_depth++;
      std::size_t lo = (std::size_t)w * chunk;
      std::size_t hi = lo + chunk < n ? lo + chunk : n;
      try {
        for (std::size_t i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
      detail::parallel_depth--;
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace conlab
