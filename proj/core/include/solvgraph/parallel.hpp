#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace solvgraph {

/// 0 means auto: SOLVGRAPH_WORKERS from the environment, else hardware
/// concurrency. Result is clamped to [1, 64].
unsigned resolve_workers(unsigned requested);

/// Run fn over [0, count) split into contiguous chunks, one per worker.
/// Results must not depend on the split; callers write to disjoint slots.
/// min_parallel is the item count under which the thread spawn costs more
/// than the work; heavy per-item loops pass a smaller value.
inline void parallel_for(uint64_t count, unsigned workers,
                         const std::function<void(uint64_t, uint64_t)>& fn,
                         uint64_t min_parallel = 1024) {
    if (count == 0) return;
    if (workers <= 1 || count < min_parallel) {
        fn(0, count);
        return;
    }
    const uint64_t nthreads = std::min<uint64_t>(workers, count);
    const uint64_t chunk = (count + nthreads - 1) / nthreads;
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (uint64_t t = 0; t < nthreads; ++t) {
        uint64_t begin = t * chunk;
        uint64_t end = std::min(count, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& th : pool) th.join();
}

inline unsigned resolve_workers(unsigned requested) {
    unsigned w = requested;
    if (w == 0) {
        if (const char* env = std::getenv("SOLVGRAPH_WORKERS")) {
            long v = std::strtol(env, nullptr, 10);
            if (v > 0) w = static_cast<unsigned>(v);
        }
    }
    if (w == 0) w = std::thread::hardware_concurrency();
    if (w == 0) w = 1;
    return std::min(w, 64u);
}

}  // namespace solvgraph
