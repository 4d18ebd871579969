#pragma once

#include <cstddef>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace symdepth {

/// Worker count for instance-level parallelism: the SYMDEPTH_THREADS
/// environment variable when set, else the hardware concurrency; at least 1.
/// Thread count never changes results, only wall time.
inline int worker_count() {
  if (const char* env = std::getenv("SYMDEPTH_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Run fn(0..count-1), strided across workers. fn must write only to its own
/// index's slot; with one worker this is a plain loop.
inline void parallel_for_index(std::size_t count, const std::function<void(std::size_t)>& fn) {
  int workers = worker_count();
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = static_cast<std::size_t>(w); i < count;
           i += static_cast<std::size_t>(workers))
        fn(i);
    });
  }
  for (std::thread& t : pool) t.join();
}

}  // namespace symdepth
