#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace rgw {

// Static contiguous block partition of [0, count) over `workers` threads;
// block_fn(worker, begin, end). The assignment depends only on count and
// workers, so per-worker results can be merged deterministically.
template <class BlockFn>
void parallel_blocks(std::uint64_t count, int workers, BlockFn&& block_fn) {
    if (workers <= 1 || count < 2) {
        block_fn(0, std::uint64_t{0}, count);
        return;
    }
    auto w = static_cast<std::uint64_t>(workers);
    if (w > count) w = count;
    std::vector<std::thread> threads;
    threads.reserve(w);
    std::uint64_t chunk = count / w;
    std::uint64_t extra = count % w;
    std::uint64_t begin = 0;
    for (std::uint64_t i = 0; i < w; ++i) {
        std::uint64_t end = begin + chunk + (i < extra ? 1 : 0);
        threads.emplace_back([&block_fn, i, begin, end] {
            block_fn(static_cast<int>(i), begin, end);
        });
        begin = end;
    }
    for (auto& t : threads) t.join();
}

}  // namespace rgw
