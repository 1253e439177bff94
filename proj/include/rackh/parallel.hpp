#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace rackh {

// Worker count: hardware concurrency capped by RACKH_MAX_PARALLEL (>= 1).
inline unsigned max_parallel() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char *env = std::getenv("RACKH_MAX_PARALLEL")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v < 1024) n = std::min<unsigned>(n, static_cast<unsigned>(v));
    }
    return n;
}

// Split [0, total) into contiguous chunks, one per worker; deterministic as long
// as workers write disjoint output ranges.
inline void parallel_for(std::size_t total, const std::function<void(std::size_t, std::size_t)> &chunk) {
    unsigned workers = std::min<std::size_t>(max_parallel(), std::max<std::size_t>(total / 64, 1));
    if (workers <= 1) {
        chunk(0, total);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t per = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t lo = w * per, hi = std::min(total, lo + per);
        if (lo >= hi) break;
        pool.emplace_back(chunk, lo, hi);
    }
    for (auto &t : pool) t.join();
}

} // namespace rackh
