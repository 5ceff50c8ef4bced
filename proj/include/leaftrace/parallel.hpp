#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace leaftrace {

// Process-wide worker count; the CLI's --jobs flag writes it.
inline int& worker_threads() {
  static int n = static_cast<int>(std::thread::hardware_concurrency());
  return n;
}

// Splits [0, n) into `chunks` contiguous ranges and runs fn(chunk, lo, hi)
// for each. Chunk boundaries depend only on (n, chunks), never on thread
// count or scheduling, so callers that keep per-chunk partial results and
// reduce them in chunk order stay deterministic.
inline void parallel_chunks(int64_t n, int chunks,
                            const std::function<void(int, int64_t, int64_t)>& fn) {
  if (n <= 0 || chunks <= 0) return;
  if (chunks > n) chunks = static_cast<int>(n);
  const int64_t base = n / chunks, rem = n % chunks;
  auto bounds = [&](int c) {
    const int64_t lo = c * base + std::min<int64_t>(c, rem);
    return std::pair<int64_t, int64_t>(lo, lo + base + (c < rem ? 1 : 0));
  };
  const int nthreads = std::min(worker_threads(), chunks);
  if (nthreads <= 1) {
    for (int c = 0; c < chunks; ++c) {
      auto [lo, hi] = bounds(c);
      fn(c, lo, hi);
    }
    return;
  }
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) {
      auto [lo, hi] = bounds(c);
      fn(c, lo, hi);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(nthreads - 1);
  for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

// Convenience: one item per call, chunked under the hood.
inline void parallel_for(int64_t n, const std::function<void(int64_t)>& fn,
                         int chunks_hint = 0) {
  const int chunks = chunks_hint > 0 ? chunks_hint
                                     : std::max(1, worker_threads() * 4);
  parallel_chunks(n, chunks, [&](int, int64_t lo, int64_t hi) {
    for (int64_t i = lo; i < hi; ++i) fn(i);
  });
}

}  // namespace leaftrace
