// Minimal fork-join loop used by the distance kernels. Chunks write to
// disjoint output slots, so results do not depend on scheduling.
#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace prcurve {

inline unsigned worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : std::min(hw, 16u);
}

// Runs fn(begin, end) over a partition of [0, n).
inline void parallel_for(std::size_t n,
                         const std::function<void(std::size_t, std::size_t)>& fn) {
  const unsigned workers = worker_count();
  if (workers <= 1 || n < 4096) {
    fn(0, n);
    return;
  }
  const std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t lo = std::min(n, w * chunk);
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back(fn, lo, hi);
  }
  for (auto& t : pool) t.join();
}

}  // namespace prcurve
