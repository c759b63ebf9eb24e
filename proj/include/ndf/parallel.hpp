#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace ndf {

/// Worker cap from NDF_LAB_THREADS, falling back to the hardware concurrency.
inline unsigned threads_from_env() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("NDF_LAB_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return hw;
}

/// Runs body(task) for task in [0, tasks) on up to `threads` workers.
///
/// Tasks write to their own output slots, so results do not depend on scheduling.
template <class Body>
void parallel_for(std::uint64_t tasks, unsigned threads, Body&& body) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, threads), tasks));
  if (workers <= 1) {
    for (std::uint64_t t = 0; t < tasks; ++t) body(t);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::uint64_t t = next++; t < tasks; t = next++) {
        try {
          body(t);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = tasks;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace ndf
