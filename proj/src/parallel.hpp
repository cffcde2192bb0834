#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace varcong::detail {

/// Run fn(i) for every i in [0, count), spread over `workers` threads.  Each
/// index runs exactly once; callers write results into index-addressed slots,
/// which keeps outputs independent of the worker count and of scheduling.
inline void parallel_index(int workers, int count,
                           const std::function<void(int)>& fn) {
  if (workers <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  const int nthreads = std::min(workers, count);
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (int t = 0; t < nthreads; ++t)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  for (auto& th : pool) th.join();
}

/// VARCONG_JOBS when set and positive, otherwise the hardware concurrency,
/// clamped to [1, 16].
inline int default_workers() {
  if (const char* env = std::getenv("VARCONG_JOBS")) {
    int v = std::atoi(env);
    if (v > 0) return std::min(v, 16);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return std::max(1, std::min<int>(static_cast<int>(hw), 16));
}

}  // namespace varcong::detail
