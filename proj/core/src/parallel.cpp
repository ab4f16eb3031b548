#include "dclr/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace dclr {

namespace {
std::atomic<int> g_threads{0};
}

void set_compute_threads(int n) { g_threads.store(n < 0 ? 0 : n); }

int compute_threads() {
  int n = g_threads.load();
  if (n == 0) {
    unsigned hw = std::thread::hardware_concurrency();
    n = hw == 0 ? 1 : static_cast<int>(hw);
  }
  return n;
}

int parallel_chunks(std::int64_t n) {
  if (n <= 1) return n <= 0 ? 0 : 1;
  return static_cast<int>(std::min<std::int64_t>(n, compute_threads()));
}

void parallel_for(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& chunk_fn) {
  if (n <= 0) return;
  const int chunks = parallel_chunks(n);
  if (chunks <= 1) {
    chunk_fn(0, n);
    return;
  }
  const std::int64_t per = (n + chunks - 1) / chunks;
  std::vector<std::thread> workers;
  workers.reserve(chunks);
  for (int c = 0; c < chunks; ++c) {
    const std::int64_t lo = c * per;
    const std::int64_t hi = std::min<std::int64_t>(n, lo + per);
    if (lo >= hi) break;
    workers.emplace_back([&chunk_fn, lo, hi] { chunk_fn(lo, hi); });
  }
  for (auto& w : workers) w.join();
}

}  // namespace dclr
