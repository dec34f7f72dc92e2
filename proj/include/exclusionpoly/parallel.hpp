#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace exclusionpoly {

/// Worker cap: EXCLUSIONPOLY_THREADS when set (minimum 1), otherwise the
/// hardware concurrency.
inline int max_threads() {
  if (const char* env = std::getenv("EXCLUSIONPOLY_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed >= 1) return parsed;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

/// Runs fn(i) for i in [0, count) on up to max_threads() workers. Callers
/// keep determinism by writing into index-addressed slots and reducing in
/// order afterwards.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  const int workers = std::min<std::size_t>(max_threads(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&, t]() {
      for (std::size_t i = t; i < count; i += workers) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace exclusionpoly
