#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace kneadkit {

/// Worker cap from KNEADKIT_THREADS; defaults to the hardware count.
inline unsigned thread_count() {
  if (const char* env = std::getenv("KNEADKIT_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

/// Run fn(i) for i in [0, n). Results must be written to index-addressed
/// slots so the outcome does not depend on scheduling.
inline void parallel_for(size_t n, const std::function<void(size_t)>& fn) {
  unsigned workers = std::min<size_t>(thread_count(), n);
  if (workers <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t)
    pool.emplace_back([&, t] {
      for (size_t i = t; i < n; i += workers) fn(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace kneadkit
