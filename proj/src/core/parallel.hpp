#pragma once

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace dcg {

inline int worker_count() {
  if (const char* env = std::getenv("DCGPULSE_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

// Static block partition; fn(i) must only write state owned by index i, so
// results are identical for any worker count.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  int workers = worker_count();
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::size_t nw = std::min<std::size_t>(workers, n);
  std::vector<std::thread> pool;
  pool.reserve(nw);
  for (std::size_t w = 0; w < nw; ++w) {
    std::size_t lo = n * w / nw;
    std::size_t hi = n * (w + 1) / nw;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace dcg
