#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace radon {

// worker count from RADON_THREADS (default 1); clamped to [1, 256]
int thread_count();

// Deterministic block map-reduce: [0, n) is cut into fixed-size blocks, block
// results are computed independently and combined sequentially in block order,
// so the result is bit-identical for every worker count.
template <class R, class BlockFn, class CombineFn>
R block_reduce(std::size_t n, std::size_t blockSize, R init, BlockFn block, CombineFn combine) {
  if (n == 0) return init;
  if (blockSize == 0) blockSize = 1;
  std::size_t nblocks = (n + blockSize - 1) / blockSize;
  std::vector<R> partial(nblocks);
  int workers = thread_count();
  if (workers <= 1 || nblocks == 1) {
    for (std::size_t b = 0; b < nblocks; ++b)
      partial[b] = block(b * blockSize, std::min(n, (b + 1) * blockSize));
  } else {
    std::atomic<std::size_t> nextBlock{0};
    auto work = [&] {
      for (;;) {
        std::size_t b = nextBlock.fetch_add(1);
        if (b >= nblocks) break;
        partial[b] = block(b * blockSize, std::min(n, (b + 1) * blockSize));
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  R acc = init;
  for (std::size_t b = 0; b < nblocks; ++b) acc = combine(acc, partial[b]);
  return acc;
}

}  // namespace radon
