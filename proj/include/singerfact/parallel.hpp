#pragma once

#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace singerfact {

// Worker count: explicit > SINGERFACT_THREADS > hardware. Results never
// depend on the choice; only wall time does.
inline unsigned resolve_threads(int requested) {
  if (requested > 0) return static_cast<unsigned>(requested);
  if (const char* env = std::getenv("SINGERFACT_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Static range split; fn(begin, end) runs on disjoint chunks.
template <typename Fn>
void parallel_chunks(uint64_t total, unsigned threads, Fn&& fn) {
  if (threads <= 1 || total < 4096) {
    fn(uint64_t(0), total);
    return;
  }
  std::vector<std::thread> pool;
  uint64_t chunk = (total + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    uint64_t lo = t * chunk, hi = std::min(total, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace singerfact
