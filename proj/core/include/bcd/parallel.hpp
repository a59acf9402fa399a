#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace bcd {

// 0 means "use hardware_concurrency".
inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1u : hw;
}

// Splits [0, count) into one contiguous block per worker and runs
// fn(worker, begin, end) on each, worker in [0, threads).  Workers get
// disjoint index ranges, so fn may keep per-worker scratch state without
// synchronization.  Small workloads run inline on the calling thread;
// spawning threads for a handful of iterations costs more than it saves.
template <typename Fn>
void parallel_blocks(std::uint64_t count, unsigned threads, Fn&& fn) {
    threads = resolve_threads(threads);
    const std::uint64_t min_per_thread = 32;
    if (threads > 1 && count / threads < min_per_thread)
        threads = static_cast<unsigned>(std::max<std::uint64_t>(1, count / min_per_thread));

    if (threads <= 1 || count == 0) {
        if (count > 0) fn(0u, std::uint64_t{0}, count);
        return;
    }

    std::vector<std::thread> pool;
    pool.reserve(threads);
    const std::uint64_t base = count / threads;
    const std::uint64_t extra = count % threads;
    std::uint64_t begin = 0;
    for (unsigned t = 0; t < threads; ++t) {
        const std::uint64_t len = base + (t < extra ? 1 : 0);
        const std::uint64_t end = begin + len;
        if (len > 0) pool.emplace_back([&fn, t, begin, end] { fn(t, begin, end); });
        begin = end;
    }
    for (auto& th : pool) th.join();
}

} // namespace bcd
