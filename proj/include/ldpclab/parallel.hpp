#pragma once

#include <atomic>
#include <thread>
#include <vector>

namespace ldpclab {

// Runs fn(block) for block = 0..num_blocks-1 across `workers` threads and
// returns the per-block results in block order. Blocks own their randomness
// (derived from the block index), so the collected vector is identical for
// any worker count and the caller's in-order reduction is bitwise stable.
template <typename T, typename Fn>
std::vector<T> run_blocks(size_t num_blocks, int workers, Fn&& fn) {
  std::vector<T> results(num_blocks);
  if (workers <= 1 || num_blocks <= 1) {
    for (size_t b = 0; b < num_blocks; ++b) results[b] = fn(b);
    return results;
  }
  std::atomic<size_t> next{0};
  auto body = [&]() {
    for (;;) {
      size_t b = next.fetch_add(1);
      if (b >= num_blocks) return;
      results[b] = fn(b);
    }
  };
  std::vector<std::thread> pool;
  int count = std::min<size_t>(workers, num_blocks);
  pool.reserve(count);
  for (int t = 0; t < count; ++t) pool.emplace_back(body);
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace ldpclab
