#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace gsurf {

// Resolve a requested thread count: explicit value wins, then the
// GSURF_THREADS environment variable, then hardware concurrency.
inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("GSURF_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : (int)hw;
}

// Static chunking over [0, count): thread t handles one contiguous range.
// Results written to per-index slots are identical for any thread count,
// which is what keeps census output byte-stable under --threads.
inline void parallel_chunks(int threads, int64_t count,
                            const std::function<void(int64_t, int64_t)>& body) {
  if (count <= 0) return;
  if (threads <= 1 || count == 1) {
    body(0, count);
    return;
  }
  int nt = threads > count ? (int)count : threads;
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (int t = 0; t < nt; ++t) {
    int64_t begin = count * t / nt;
    int64_t end = count * (t + 1) / nt;
    pool.emplace_back([&body, begin, end] { body(begin, end); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace gsurf
