// SPDX-License-Identifier: Apache-2.0
#include "parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace slicespace {

int thread_budget(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SLICESPACE_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, int threads) {
  const int budget = thread_budget(threads);
  if (budget <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const std::size_t nworkers = std::min<std::size_t>(static_cast<std::size_t>(budget), n);
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(nworkers);
  for (std::size_t t = 0; t < nworkers; ++t) {
    pool.emplace_back([&]() {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) break;
        fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace slicespace
